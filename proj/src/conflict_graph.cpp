#include "geomis/conflict_graph.hpp"

#include <algorithm>
#include <sstream>

namespace geomis {

bool ConflictGraph::has_edge(int i, int j) const {
    const auto& ni = adj[static_cast<std::size_t>(i)];
    return std::binary_search(ni.begin(), ni.end(), j);
}

std::string ConflictGraph::to_dimacs() const {
    std::ostringstream os;
    os << "p edge " << n << " " << edges.size() << "\n";
    for (const auto& e : edges) os << "e " << e.i + 1 << " " << e.j + 1 << "\n";
    return os.str();
}

namespace {

ConflictGraph assemble(int n, GraphMode mode, std::vector<ConflictGraph::Edge> edges) {
    ConflictGraph g;
    g.n = n;
    g.mode = mode;
    g.adj.assign(static_cast<std::size_t>(n), {});
    std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (const auto& e : edges) {
        g.adj[static_cast<std::size_t>(e.i)].push_back(e.j);
        g.adj[static_cast<std::size_t>(e.j)].push_back(e.i);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    g.edges = std::move(edges);
    return g;
}

} // namespace

ConflictGraph build_geometric(const Instance& in, double eps) {
    std::vector<ConflictGraph::Edge> edges;
    int n = in.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (intersects(in.obj(i).shape, in.obj(j).shape, eps))
                edges.push_back({i, j, std::nullopt});
    return assemble(n, GraphMode::Geometric, std::move(edges));
}

ConflictGraph build_discrete(const Instance& in, double eps) {
    if (in.points.empty()) throw MissingPoints{};
    int n = in.size();
    // which points each object contains, so the pair scan touches only
    // plausible witnesses
    std::vector<std::vector<int>> pts_of(static_cast<std::size_t>(n));
    for (std::size_t p = 0; p < in.points.size(); ++p)
        for (int i = 0; i < n; ++i)
            if (contains_point(in.obj(i).shape, in.points[p], eps))
                pts_of[static_cast<std::size_t>(i)].push_back(static_cast<int>(p));
    std::vector<ConflictGraph::Edge> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const auto& a = pts_of[static_cast<std::size_t>(i)];
            const auto& b = pts_of[static_cast<std::size_t>(j)];
            // first common point in P order
            std::size_t ia = 0, ib = 0;
            while (ia < a.size() && ib < b.size()) {
                if (a[ia] == b[ib]) {
                    edges.push_back({i, j, in.points[static_cast<std::size_t>(a[ia])]});
                    break;
                }
                (a[ia] < b[ib] ? ia : ib)++;
            }
        }
    }
    return assemble(n, GraphMode::Discrete, std::move(edges));
}

ConflictGraph graph_from_edges(int n, const std::vector<std::pair<int, int>>& edges,
                               GraphMode mode) {
    std::vector<ConflictGraph::Edge> es;
    es.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        es.push_back({i, j, std::nullopt});
    }
    return assemble(n, mode, std::move(es));
}

bool is_independent(const ConflictGraph& g, std::span<const int> ids) {
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b)
            if (ids[a] == ids[b] || g.has_edge(ids[a], ids[b])) return false;
    return true;
}

} // namespace geomis
