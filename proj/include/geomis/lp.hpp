#ifndef GEOMIS_LP_HPP
#define GEOMIS_LP_HPP

#include <span>
#include <string>
#include <vector>

#include "geomis/conflict_graph.hpp"
#include "geomis/instance.hpp"

namespace geomis {

struct RowProvenance {
    enum Kind { Vertex, Containment, DiscretePoint } kind = Vertex;
    Point p{};        // Vertex / DiscretePoint
    int object = -1;  // Containment: the inner object
};

// max sum w_i x_i  s.t.  sum_{i in row} x_i <= 1 per row,  0 <= x <= 1.
struct PackingLP {
    int n = 0;
    std::vector<double> weights;
    struct Row {
        std::vector<int> ids;  // sorted
        RowProvenance prov;
    };
    std::vector<Row> rows;
    std::vector<std::string> warnings;

    double row_load(const Row& row, std::span<const double> x) const;
    double max_load(std::span<const double> x) const;
    // "max: w0 w1 ..." then one "<= 1 : i j k" line per row.
    std::string export_text() const;
};

struct FractionalSolution {
    std::vector<double> x;
    double value = 0.0;
    double max_row_violation = 0.0;
    bool iteration_limit_hit = false;
};

// Geometric mode: one row per arrangement vertex with covering size >= 2,
// plus one containment row {i} u {j : shape_i inside shape_j} per object when
// that set has size >= 2. Discrete mode: one row per point of P with covering
// size >= 2. Duplicate rows are dropped, keeping the first provenance.
PackingLP build_independent_set_lp(const Instance& in, GraphMode mode,
                                   double eps = kGeomEps);

// Deterministic solve to well within (1-eps): bounded-variable simplex over a
// lazily grown active row set, then a final uniform scale-down so every row
// holds with zero violation.
FractionalSolution solve_packing_lp(const PackingLP& lp, double eps = 1e-4);

// min sum y_p  s.t.  sum_{p in f_i} y_p >= 1 per object,  0 <= y <= 1.
// Candidates are the arrangement vertices; an object containing none gets a
// synthetic candidate at its centroid.
struct CoveringLP {
    std::vector<Point> candidates;
    std::vector<std::vector<int>> covering;  // candidate indices per object
    int num_objects() const { return static_cast<int>(covering.size()); }
};

struct CoveringSolution {
    std::vector<double> y;
    double value = 0.0;
    bool iteration_limit_hit = false;
};

CoveringLP build_piercing_lp(const Instance& in, double eps = kGeomEps);
CoveringSolution solve_covering_lp(const CoveringLP& lp, double eps = 1e-4);

} // namespace geomis

#endif
