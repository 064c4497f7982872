#ifndef GEOMIS_LOCAL_SEARCH_HPP
#define GEOMIS_LOCAL_SEARCH_HPP

#include <optional>
#include <span>

#include "geomis/conflict_graph.hpp"

namespace geomis {

struct LocalSearchConfig {
    int b = 3;  // exchange radius: delete <= b, insert <= b+1
    std::optional<long long> max_exchanges;
};

// Family default: ceil(rho/2) where the union complexity is rho*m
// (pseudo-disks 6, admissible 3k); 3 otherwise.
int default_local_search_b(const Instance& in);

struct NotIndependent : std::runtime_error {
    NotIndependent() : std::runtime_error("id set has an internal conflict edge") {}
};

// Unweighted b-exchange local search from the empty set. First-improvement
// over subset sizes ascending, subsets in lexicographic id order. The result
// is independent and b-locally optimal unless max_exchanges truncated it.
SelectionResult local_search(const ConflictGraph& g, const LocalSearchConfig& cfg = {});

struct Exchange {
    std::vector<int> insert_x;  // X, independent, disjoint from the set
    std::vector<int> remove_y;  // Y = N(X) within the set, |Y| <= |X|-1
};

// nullopt iff `ids` is b-locally optimal; otherwise the first improving
// exchange in canonical order. Throws NotIndependent when ids has an edge.
std::optional<Exchange> verify_locally_optimal(const ConflictGraph& g,
                                               std::span<const int> ids, int b);

} // namespace geomis

#endif
