#ifndef GEOMIS_RECTANGLES_HPP
#define GEOMIS_RECTANGLES_HPP

#include <span>
#include <utility>

#include "geomis/lp.hpp"
#include "geomis/rounding.hpp"

namespace geomis {

// Conflict edges of a rectangle instance split by boundary crossing count:
// 0 (nesting) or 2 -> g1, 4 (crossing) -> g2.
struct EdgeSplit {
    std::vector<std::pair<int, int>> g1;
    std::vector<std::pair<int, int>> g2;
};

EdgeSplit split_edges(const Instance& in, double eps = kGeomEps);

struct CycleDetected : std::runtime_error {
    CycleDetected() : std::runtime_error("g2 edge is not comparable under the crossing order") {}
};

// Mirsky chain decomposition of the crossing partial order
// (i < j iff x-interval_i inside x-interval_j and y-interval_j inside
// y-interval_i): color(i) = longest chain ending at i, so num_colors equals
// the longest chain, the maximum clique of the comparability graph.
struct ChainColoring {
    std::vector<int> color;  // per id; 0 for ids outside the set
    int num_colors = 0;
};

ChainColoring chain_color(const Instance& in, std::span<const int> ids,
                          const std::vector<std::pair<int, int>>& g2_edges,
                          double eps = kGeomEps);

// Maximum depth over the arrangement of the given rectangles (their corners
// and pairwise boundary crossings).
int max_depth(const Instance& in, std::span<const int> ids, double eps = kGeomEps);

// LP + rounding against G1, then the heaviest color class of the Mirsky
// coloring of the survivors. Solves the LP internally unless `lp_sol` is
// passed (which must be a solution of build_independent_set_lp(in, Geometric)).
SelectionResult rectangle_mwis(const Instance& in, const RoundingConfig& cfg,
                               const FractionalSolution* lp_sol = nullptr);

// Deterministic variant: conditional-expectation branches on the combined
// estimator Phi_G1/t - Opt * sum_p E[(1+delta_p)^(depth(p,C)-t)], the
// per-point factors being exact products over the independent C-coins.
SelectionResult derandomized_rectangle_mwis(const Instance& in, const RoundingConfig& cfg,
                                            const FractionalSolution* lp_sol = nullptr);

} // namespace geomis

#endif
