#ifndef GEOMIS_ORACLE_HPP
#define GEOMIS_ORACLE_HPP

#include <span>
#include <vector>

#include "geomis/conflict_graph.hpp"
#include "geomis/lp.hpp"

namespace geomis::oracle {

struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct MwisResult {
    std::vector<int> ids;  // lexicographically smallest optimal set, sorted
    double value = 0.0;
};

// Branch and bound with a remaining-weight bound. n <= 30.
MwisResult exact_mwis(const ConflictGraph& g, std::span<const double> weights);

// Exact optimum of a packing LP by rational-arithmetic simplex (Bland's
// rule, no tolerances). Desk scale: n + rows <= 600.
double exact_lp(const PackingLP& lp);

// Exact optimum of the fractional piercing LP, same engine.
double exact_covering_lp(const CoveringLP& lp);

// Exact E[weight of I] of the reverse-scan contention-resolution rounding,
// by enumerating all 2^n coin outcomes. n <= 20.
double exhaustive_rounding_expectation(const ConflictGraph& g,
                                       std::span<const double> x,
                                       std::span<const double> weights,
                                       double tau,
                                       std::span<const int> permutation);

} // namespace geomis::oracle

#endif
