#include "geomis/local_search.hpp"

#include <algorithm>
#include <cmath>

namespace geomis {

int default_local_search_b(const Instance& in) {
    switch (in.family) {
        case Family::PseudoDisks:
            return static_cast<int>(std::ceil(in.rho / 2.0));
        case Family::Admissible:
            return static_cast<int>(std::ceil(3.0 * in.k / 2.0));
        default:
            return 3;
    }
}

namespace {

// Enumerates candidate exchanges: X independent, X disjoint from L, |X| = s,
// ids ascending; Y = L-neighbors of X must stay of size <= s-1. Calls `fn`
// with the first improving exchange and stops. Returns true if one was found.
struct ExchangeScan {
    const ConflictGraph& g;
    const std::vector<char>& in_l;  // membership mask of L
    int b;

    std::vector<int> x;
    std::vector<int> y;
    std::vector<int> y_hits;  // per id, how many X-members touch it

    bool found = false;
    std::vector<int> out_x, out_y;

    ExchangeScan(const ConflictGraph& g_, const std::vector<char>& in_l_, int b_)
        : g(g_), in_l(in_l_), b(b_), y_hits(static_cast<std::size_t>(g_.n), 0) {}

    bool run() {
        for (int s = 1; s <= b + 1 && !found; ++s) extend(0, s);
        return found;
    }

    void extend(int start, int s) {
        if (found) return;
        if (static_cast<int>(x.size()) == s) {
            if (static_cast<int>(y.size()) <= s - 1) {
                found = true;
                out_x = x;
                out_y = y;
                std::sort(out_y.begin(), out_y.end());
            }
            return;
        }
        int remaining = s - static_cast<int>(x.size());
        for (int v = start; v + remaining <= g.n && !found; ++v) {
            if (in_l[static_cast<std::size_t>(v)]) continue;
            bool indep = true;
            for (int u : x)
                if (g.has_edge(u, v)) { indep = false; break; }
            if (!indep) continue;
            // grow Y by v's L-neighbors; |Y| beyond b can never satisfy |Y| <= |X|-1
            int added = 0;
            for (int u : g.neighbors(v)) {
                if (!in_l[static_cast<std::size_t>(u)]) continue;
                if (y_hits[static_cast<std::size_t>(u)]++ == 0) {
                    y.push_back(u);
                    ++added;
                }
            }
            if (static_cast<int>(y.size()) <= b) {
                x.push_back(v);
                extend(v + 1, s);
                if (!found) x.pop_back();
            }
            if (found) return;
            for (int u : g.neighbors(v)) {
                if (!in_l[static_cast<std::size_t>(u)]) continue;
                if (--y_hits[static_cast<std::size_t>(u)] == 0) {
                    y.erase(std::find(y.begin(), y.end(), u));
                }
            }
            (void)added;
        }
    }
};

} // namespace

SelectionResult local_search(const ConflictGraph& g, const LocalSearchConfig& cfg) {
    if (cfg.b < 1) throw std::invalid_argument("local search needs b >= 1");
    std::vector<char> in_l(static_cast<std::size_t>(g.n), 0);
    SelectionResult res;
    res.trace.algorithm = "local-search";
    long long exchanges = 0;
    while (true) {
        if (cfg.max_exchanges && exchanges >= *cfg.max_exchanges) {
            res.trace.truncated = true;
            break;
        }
        ExchangeScan scan(g, in_l, cfg.b);
        if (!scan.run()) break;
        for (int u : scan.out_y) in_l[static_cast<std::size_t>(u)] = 0;
        for (int v : scan.out_x) in_l[static_cast<std::size_t>(v)] = 1;
        ++exchanges;
    }
    for (int v = 0; v < g.n; ++v)
        if (in_l[static_cast<std::size_t>(v)]) res.chosen.push_back(v);
    res.total_weight = static_cast<double>(res.chosen.size());
    res.trace.exchanges = static_cast<int>(exchanges);
    return res;
}

std::optional<Exchange> verify_locally_optimal(const ConflictGraph& g,
                                               std::span<const int> ids, int b) {
    if (!is_independent(g, ids)) throw NotIndependent{};
    std::vector<char> in_l(static_cast<std::size_t>(g.n), 0);
    for (int id : ids) in_l[static_cast<std::size_t>(id)] = 1;
    ExchangeScan scan(g, in_l, b);
    if (!scan.run()) return std::nullopt;
    return Exchange{scan.out_x, scan.out_y};
}

} // namespace geomis
