#ifndef GEOMIS_ROUNDING_HPP
#define GEOMIS_ROUNDING_HPP

#include <cstdint>
#include <optional>
#include <span>

#include "geomis/conflict_graph.hpp"

namespace geomis {

struct ResistancePermutation {
    std::vector<int> order;  // order[0] extracted first (minimum resistance)
    std::vector<double> etas;  // resistance at extraction time
};

struct RoundingConfig {
    std::optional<double> tau;  // nullopt: auto from the union-complexity bound
    std::uint64_t seed = 0;
    bool derandomize = false;
    double c_tau = 13.0;
};

struct NoUnionBound : std::runtime_error {
    NoUnionBound()
        : std::runtime_error("family=generic has no union-complexity bound; pass an explicit tau") {}
};

// Sum of x_j over the active neighbors of i (i itself excluded).
double resistance(const ConflictGraph& g, std::span<const double> x, int i,
                  std::span<const int> active);

// Repeated extract-min of resistance over the not-yet-extracted set, ties to
// the smaller id.
ResistancePermutation resistance_permutation(const ConflictGraph& g,
                                             std::span<const double> x);

// tau = c_tau * rho for families with union complexity rho*m: rho = 6 for
// pseudo-disks (or the instance override), 3k for admissible, and effective
// constant 8 for the rectangle G1 bound. Linear union complexity makes the
// value independent of the LP mass. Throws NoUnionBound for generic.
double auto_tau(const Instance& in, double c_tau = 13.0);

// Reverse-permutation coin-flip scan: each object joins the candidate set C
// with probability x/tau and enters I when nothing adjacent is already in I.
SelectionResult randomized_round(const ConflictGraph& g, std::span<const double> x,
                                 std::span<const double> weights,
                                 const ResistancePermutation& perm,
                                 const RoundingConfig& cfg);

// Same scan with the coin replaced by the branch maximizing the pessimistic
// estimator
//   Phi = sum_{decided} w_j [j in I]
//       + sum_{undecided} w_j (x_j/tau) max(0, 1 - sum_{k in B_j} s_k),
// B_j the neighbors scanned before j, s_k = x_k/tau undecided, 1 if k in I,
// 0 if decided out. Each coin's expectation is >= the current Phi, so the
// greedy branch never decreases it and the final weight is >= the initial
// bound sum w_j x_j/tau (1 - eta_j/tau).
SelectionResult derandomized_round(const ConflictGraph& g, std::span<const double> x,
                                   std::span<const double> weights,
                                   const ResistancePermutation& perm,
                                   const RoundingConfig& cfg);

// Convenience dispatch: builds the permutation, resolves tau (auto needs the
// instance family), and runs the configured variant.
SelectionResult lp_round(const Instance& in, const ConflictGraph& g,
                         std::span<const double> x, const RoundingConfig& cfg);

} // namespace geomis

#endif
