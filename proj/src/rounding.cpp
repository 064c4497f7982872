#include "geomis/rounding.hpp"

#include <algorithm>
#include <cmath>

#include "geomis/rng.hpp"
#include "estimator.hpp"

namespace geomis {

double resistance(const ConflictGraph& g, std::span<const double> x, int i,
                  std::span<const int> active) {
    std::vector<char> act(static_cast<std::size_t>(g.n), 0);
    for (int a : active) act[static_cast<std::size_t>(a)] = 1;
    double s = 0.0;
    for (int j : g.neighbors(i))
        if (act[static_cast<std::size_t>(j)]) s += x[static_cast<std::size_t>(j)];
    return s;
}

ResistancePermutation resistance_permutation(const ConflictGraph& g,
                                             std::span<const double> x) {
    int n = g.n;
    ResistancePermutation out;
    out.order.reserve(static_cast<std::size_t>(n));
    out.etas.reserve(static_cast<std::size_t>(n));
    std::vector<char> remaining(static_cast<std::size_t>(n), 1);
    std::vector<double> res(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i)
        for (int j : g.neighbors(i)) res[static_cast<std::size_t>(i)] += x[static_cast<std::size_t>(j)];
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int i = 0; i < n; ++i) {
            if (!remaining[static_cast<std::size_t>(i)]) continue;
            if (pick < 0 || res[static_cast<std::size_t>(i)] < res[static_cast<std::size_t>(pick)])
                pick = i;
        }
        remaining[static_cast<std::size_t>(pick)] = 0;
        out.order.push_back(pick);
        out.etas.push_back(std::max(0.0, res[static_cast<std::size_t>(pick)]));
        for (int j : g.neighbors(pick))
            if (remaining[static_cast<std::size_t>(j)])
                res[static_cast<std::size_t>(j)] -= x[static_cast<std::size_t>(pick)];
    }
    return out;
}

double auto_tau(const Instance& in, double c_tau) {
    switch (in.family) {
        case Family::PseudoDisks: return c_tau * in.rho;
        case Family::Admissible: return c_tau * 3.0 * in.k;
        case Family::Rectangles: return c_tau * 8.0;  // G1 energy bound 4E, doubled
        case Family::Generic: break;
    }
    throw NoUnionBound{};
}

namespace {

double resolve_tau(const RoundingConfig& cfg) {
    if (!cfg.tau) throw std::invalid_argument("tau unresolved; use lp_round for auto selection");
    if (!(*cfg.tau > 0.0)) throw std::invalid_argument("tau must be positive");
    return *cfg.tau;
}

} // namespace

SelectionResult randomized_round(const ConflictGraph& g, std::span<const double> x,
                                 std::span<const double> weights,
                                 const ResistancePermutation& perm,
                                 const RoundingConfig& cfg) {
    const double tau = resolve_tau(cfg);
    const int n = g.n;
    SelectionResult res;
    res.trace.algorithm = "lp-round";
    res.trace.permutation = perm.order;
    res.trace.etas = perm.etas;
    res.trace.tau = tau;
    res.trace.seed = cfg.seed;
    std::vector<char> in_i(static_cast<std::size_t>(n), 0);
    for (int k = n - 1; k >= 0; --k) {
        int j = perm.order[static_cast<std::size_t>(k)];
        double p = x[static_cast<std::size_t>(j)] / tau;
        bool clamped = p > 1.0;
        p = std::clamp(p, 0.0, 1.0);
        double coin = unit_coin(cfg.seed, static_cast<std::uint64_t>(j));
        bool in_c = coin < p;
        bool joins = false;
        if (in_c) {
            joins = true;
            for (int u : g.neighbors(j))
                if (in_i[static_cast<std::size_t>(u)]) { joins = false; break; }
        }
        if (joins) {
            in_i[static_cast<std::size_t>(j)] = 1;
            res.total_weight += weights[static_cast<std::size_t>(j)];
        }
        res.trace.decisions.push_back({j, coin, clamped, in_c, joins, 0.0});
    }
    for (int v = 0; v < n; ++v)
        if (in_i[static_cast<std::size_t>(v)]) res.chosen.push_back(v);
    return res;
}

SelectionResult derandomized_round(const ConflictGraph& g, std::span<const double> x,
                                   std::span<const double> weights,
                                   const ResistancePermutation& perm,
                                   const RoundingConfig& cfg) {
    const double tau = resolve_tau(cfg);
    const int n = g.n;
    SelectionResult res;
    res.trace.algorithm = "lp-round-derand";
    res.trace.permutation = perm.order;
    res.trace.etas = perm.etas;
    res.trace.tau = tau;
    res.trace.seed = cfg.seed;
    res.trace.derandomized = true;

    std::vector<int> scan(perm.order.rbegin(), perm.order.rend());
    detail::ContentionEstimator est(g, x, weights, tau, scan);
    res.trace.estimator_initial = est.phi();

    for (int k = 0; k < n; ++k) {
        int j = scan[static_cast<std::size_t>(k)];
        auto [dh, dt] = est.deltas(j);
        bool heads = dh >= dt;
        bool joins = est.commit(j, heads, heads ? dh : dt);
        if (joins) res.total_weight += weights[static_cast<std::size_t>(j)];
        res.trace.decisions.push_back({j, -1.0, est.clamped(j), heads, joins, est.phi()});
    }
    res.trace.estimator_final = est.phi();
    for (int v = 0; v < n; ++v)
        if (est.in_i(v)) res.chosen.push_back(v);
    return res;
}

SelectionResult lp_round(const Instance& in, const ConflictGraph& g,
                         std::span<const double> x, const RoundingConfig& cfg) {
    RoundingConfig resolved = cfg;
    if (!resolved.tau) resolved.tau = auto_tau(in, cfg.c_tau);
    auto perm = resistance_permutation(g, x);
    auto res = cfg.derandomize
                   ? derandomized_round(g, x, in.weights(), perm, resolved)
                   : randomized_round(g, x, in.weights(), perm, resolved);
    return res;
}

} // namespace geomis
