#ifndef GEOMIS_CONFLICT_GRAPH_HPP
#define GEOMIS_CONFLICT_GRAPH_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "geomis/instance.hpp"

namespace geomis {

enum class GraphMode { Geometric, Discrete };

struct MissingPoints : std::runtime_error {
    MissingPoints() : std::runtime_error("discrete mode needs a point set") {}
};

struct ConflictGraph {
    struct Edge {
        int i = 0;
        int j = 0;                     // i < j
        std::optional<Point> witness;  // shared point of P in discrete mode
    };

    int n = 0;
    GraphMode mode = GraphMode::Geometric;
    std::vector<std::vector<int>> adj;  // sorted neighbor lists
    std::vector<Edge> edges;            // sorted by (i, j)

    bool has_edge(int i, int j) const;
    int degree(int i) const { return static_cast<int>(adj[static_cast<std::size_t>(i)].size()); }
    const std::vector<int>& neighbors(int i) const { return adj[static_cast<std::size_t>(i)]; }
    std::size_t edge_count() const { return edges.size(); }

    // "p edge n m" header then one "e i j" line per edge, 1-based ids.
    std::string to_dimacs() const;
};

// Edge (i,j) iff the closed regions intersect (containment included).
ConflictGraph build_geometric(const Instance& in, double eps = kGeomEps);

// Edge (i,j) iff some p in P lies in both closed regions; the witness is the
// first such point in P order.
ConflictGraph build_discrete(const Instance& in, double eps = kGeomEps);

// Build directly from an edge list (used for G1-restricted rounding).
ConflictGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                               GraphMode mode = GraphMode::Geometric);

bool is_independent(const ConflictGraph& g, std::span<const int> ids);

} // namespace geomis

#endif
