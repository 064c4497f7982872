#include "geomis/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>

#include <gmpxx.h>

namespace geomis::oracle {

namespace {

constexpr double kTol = 1e-9;

std::vector<std::uint64_t> adjacency_masks(const ConflictGraph& g) {
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(g.n), 0);
    for (const auto& e : g.edges) {
        adj[static_cast<std::size_t>(e.i)] |= std::uint64_t{1} << e.j;
        adj[static_cast<std::size_t>(e.j)] |= std::uint64_t{1} << e.i;
    }
    return adj;
}

} // namespace

MwisResult exact_mwis(const ConflictGraph& g, std::span<const double> weights) {
    int n = g.n;
    if (n > 30) throw TooLarge("exact_mwis supports n <= 30, got n = " + std::to_string(n));
    auto adj = adjacency_masks(g);

    auto weight_sum = [&](std::uint64_t mask) {
        double s = 0.0;
        while (mask) {
            int v = std::countr_zero(mask);
            s += weights[static_cast<std::size_t>(v)];
            mask &= mask - 1;
        }
        return s;
    };
    auto pivot_of = [&](std::uint64_t avail) {
        int best = -1, bestdeg = -1;
        for (std::uint64_t m = avail; m;) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int deg = std::popcount(adj[static_cast<std::size_t>(v)] & avail);
            if (deg > bestdeg) { bestdeg = deg; best = v; }
        }
        return best;
    };

    double best = 0.0;
    std::function<void(std::uint64_t, double)> search = [&](std::uint64_t avail, double cur) {
        if (cur > best) best = cur;
        if (!avail || cur + weight_sum(avail) <= best) return;
        int v = pivot_of(avail);
        std::uint64_t bit = std::uint64_t{1} << v;
        search(avail & ~bit & ~adj[static_cast<std::size_t>(v)],
               cur + weights[static_cast<std::size_t>(v)]);
        search(avail & ~bit, cur);
    };
    std::uint64_t full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    search(full, 0.0);

    // can an independent set within `avail` reach `target`?
    std::function<bool(std::uint64_t, double)> reachable = [&](std::uint64_t avail,
                                                               double target) {
        if (target <= kTol) return true;
        if (!avail || weight_sum(avail) < target - kTol) return false;
        int v = pivot_of(avail);
        std::uint64_t bit = std::uint64_t{1} << v;
        if (reachable(avail & ~bit & ~adj[static_cast<std::size_t>(v)],
                      target - weights[static_cast<std::size_t>(v)]))
            return true;
        return reachable(avail & ~bit, target);
    };

    // lexicographically smallest optimal set: include each id in turn iff an
    // optimal completion still exists
    MwisResult res;
    std::uint64_t avail = full;
    double cur = 0.0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t bit = std::uint64_t{1} << v;
        if (!(avail & bit)) continue;
        double wv = weights[static_cast<std::size_t>(v)];
        if (reachable(avail & ~bit & ~adj[static_cast<std::size_t>(v)], best - cur - wv)) {
            res.ids.push_back(v);
            cur += wv;
            avail &= ~bit & ~adj[static_cast<std::size_t>(v)];
        } else {
            avail &= ~bit;
        }
    }
    res.value = best;
    return res;
}

// ---- exact rational simplex -------------------------------------------------

namespace {

// max c.x  s.t.  sign_r * sum_{j in ids_r} x_j <= rhs_r,  0 <= x_j <= 1.
// Slack variables are unbounded above. Bland's rule throughout, so the method
// terminates without tolerances.
struct RationalLp {
    int n = 0;
    struct Row {
        std::vector<int> ids;
        int sign = 1;
        mpq_class rhs;
    };
    std::vector<Row> rows;
    std::vector<mpq_class> c;
    bool start_at_upper = false;
};

mpq_class solve_rational(const RationalLp& lp) {
    const int n = lp.n;
    const int m = static_cast<int>(lp.rows.size());
    const int N = n + m;
    if (m == 0) {
        mpq_class v = 0;
        for (int j = 0; j < n; ++j)
            if (lp.c[static_cast<std::size_t>(j)] > 0) v += lp.c[static_cast<std::size_t>(j)];
        return v;
    }

    // sparse columns: structural j -> rows containing it, slack r -> row r
    std::vector<std::vector<int>> col(static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r)
        for (int j : lp.rows[static_cast<std::size_t>(r)].ids)
            col[static_cast<std::size_t>(j)].push_back(r);

    auto col_sign = [&](int r) { return lp.rows[static_cast<std::size_t>(r)].sign; };
    auto is_slack = [&](int var) { return var >= n; };
    auto cost = [&](int var) -> mpq_class {
        return is_slack(var) ? mpq_class(0) : lp.c[static_cast<std::size_t>(var)];
    };

    std::vector<std::vector<mpq_class>> binv(static_cast<std::size_t>(m),
                                             std::vector<mpq_class>(static_cast<std::size_t>(m), 0));
    for (int i = 0; i < m; ++i) binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;
    std::vector<char> in_basis(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < m; ++i) in_basis[static_cast<std::size_t>(n + i)] = 1;
    std::vector<char> at_upper(static_cast<std::size_t>(N), 0);
    if (lp.start_at_upper)
        for (int j = 0; j < n; ++j) at_upper[static_cast<std::size_t>(j)] = 1;

    auto compute_xb = [&](std::vector<mpq_class>& xb) {
        std::vector<mpq_class> rhs(static_cast<std::size_t>(m));
        for (int r = 0; r < m; ++r) rhs[static_cast<std::size_t>(r)] = lp.rows[static_cast<std::size_t>(r)].rhs;
        for (int j = 0; j < n; ++j)
            if (!in_basis[static_cast<std::size_t>(j)] && at_upper[static_cast<std::size_t>(j)])
                for (int r : col[static_cast<std::size_t>(j)])
                    rhs[static_cast<std::size_t>(r)] -= col_sign(r);
        for (int i = 0; i < m; ++i) {
            mpq_class v = 0;
            for (int r = 0; r < m; ++r)
                if (binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] != 0)
                    v += binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] *
                         rhs[static_cast<std::size_t>(r)];
            xb[static_cast<std::size_t>(i)] = v;
        }
    };

    std::vector<mpq_class> xb(static_cast<std::size_t>(m));
    compute_xb(xb);

    std::vector<mpq_class> y(static_cast<std::size_t>(m)), w(static_cast<std::size_t>(m));
    for (long iter = 0; iter < 2'000'000; ++iter) {
        // y = c_B B^-1
        for (int r = 0; r < m; ++r) {
            mpq_class v = 0;
            for (int i = 0; i < m; ++i) {
                const mpq_class cb = cost(basis[static_cast<std::size_t>(i)]);
                if (cb != 0 && binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] != 0)
                    v += cb * binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
            }
            y[static_cast<std::size_t>(r)] = v;
        }
        // Bland pricing: lowest-index eligible variable
        int enter = -1;
        for (int j = 0; j < N && enter < 0; ++j) {
            if (in_basis[static_cast<std::size_t>(j)]) continue;
            mpq_class d = cost(j);
            if (is_slack(j)) {
                d -= y[static_cast<std::size_t>(j - n)];
            } else {
                for (int r : col[static_cast<std::size_t>(j)])
                    d -= y[static_cast<std::size_t>(r)] * col_sign(r);
            }
            if (!at_upper[static_cast<std::size_t>(j)] ? d > 0 : d < 0) enter = j;
        }
        if (enter < 0) break;  // optimal

        // direction w = B^-1 A_enter
        for (int i = 0; i < m; ++i) {
            mpq_class v = 0;
            if (is_slack(enter)) {
                v = binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter - n)];
            } else {
                for (int r : col[static_cast<std::size_t>(enter)])
                    v += binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] * col_sign(r);
            }
            w[static_cast<std::size_t>(i)] = v;
        }

        const int sigma = at_upper[static_cast<std::size_t>(enter)] ? -1 : 1;
        bool has_limit = !is_slack(enter);  // structural bound flip at t = 1
        mpq_class t = has_limit ? 1 : 0;
        int leave = -1;
        for (int i = 0; i < m; ++i) {
            mpq_class coef = sigma * w[static_cast<std::size_t>(i)];
            mpq_class limit;
            if (coef > 0) {
                limit = xb[static_cast<std::size_t>(i)] / coef;
            } else if (coef < 0) {
                if (is_slack(basis[static_cast<std::size_t>(i)])) continue;  // no upper bound
                limit = (1 - xb[static_cast<std::size_t>(i)]) / (-coef);
            } else {
                continue;
            }
            if (!has_limit || limit < t ||
                (limit == t && leave >= 0 &&
                 basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                has_limit = true;
                t = limit;
                leave = i;
            }
        }
        if (!has_limit) throw std::logic_error("rational simplex: unbounded direction");

        if (leave < 0) {
            // bound flip of the entering variable
            at_upper[static_cast<std::size_t>(enter)] ^= 1;
        } else {
            const int lv = basis[static_cast<std::size_t>(leave)];
            const mpq_class piv = w[static_cast<std::size_t>(leave)];
            // leaving variable lands on the bound it ran into
            at_upper[static_cast<std::size_t>(lv)] =
                (sigma * piv > 0) ? 0 : 1;
            in_basis[static_cast<std::size_t>(lv)] = 0;
            in_basis[static_cast<std::size_t>(enter)] = 1;
            basis[static_cast<std::size_t>(leave)] = enter;
            for (int r = 0; r < m; ++r)
                binv[static_cast<std::size_t>(leave)][static_cast<std::size_t>(r)] /= piv;
            for (int i = 0; i < m; ++i) {
                if (i == leave || w[static_cast<std::size_t>(i)] == 0) continue;
                const mpq_class f = w[static_cast<std::size_t>(i)];
                for (int r = 0; r < m; ++r)
                    binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] -=
                        f * binv[static_cast<std::size_t>(leave)][static_cast<std::size_t>(r)];
            }
        }
        compute_xb(xb);
    }

    mpq_class value = 0;
    for (int j = 0; j < n; ++j)
        if (!in_basis[static_cast<std::size_t>(j)] && at_upper[static_cast<std::size_t>(j)])
            value += lp.c[static_cast<std::size_t>(j)];
    for (int i = 0; i < m; ++i) {
        const int v = basis[static_cast<std::size_t>(i)];
        if (!is_slack(v)) value += lp.c[static_cast<std::size_t>(v)] * xb[static_cast<std::size_t>(i)];
    }
    return value;
}

} // namespace

double exact_lp(const PackingLP& lp) {
    if (lp.n + static_cast<int>(lp.rows.size()) > 600)
        throw TooLarge("exact_lp: n + rows must stay <= 600");
    RationalLp r;
    r.n = lp.n;
    r.c.reserve(static_cast<std::size_t>(lp.n));
    for (double wv : lp.weights) r.c.emplace_back(wv);  // exact double -> rational
    for (const auto& row : lp.rows) r.rows.push_back({row.ids, 1, mpq_class(1)});
    r.start_at_upper = false;
    return solve_rational(r).get_d();
}

double exact_covering_lp(const CoveringLP& lp) {
    int nc = static_cast<int>(lp.candidates.size());
    if (nc + lp.num_objects() > 600)
        throw TooLarge("exact_covering_lp: candidates + objects must stay <= 600");
    // min sum y = -max(-sum y) with rows -sum_{p in f_i} y_p <= -1
    RationalLp r;
    r.n = nc;
    r.c.assign(static_cast<std::size_t>(nc), mpq_class(-1));
    for (const auto& cov : lp.covering) r.rows.push_back({cov, -1, mpq_class(-1)});
    r.start_at_upper = true;
    return (-solve_rational(r)).get_d();
}

double exhaustive_rounding_expectation(const ConflictGraph& g,
                                       std::span<const double> x,
                                       std::span<const double> weights,
                                       double tau,
                                       std::span<const int> permutation) {
    int n = g.n;
    if (n > 20) throw TooLarge("exhaustive_rounding_expectation supports n <= 20");
    auto adj = adjacency_masks(g);
    std::vector<double> p(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        p[static_cast<std::size_t>(j)] =
            std::clamp(x[static_cast<std::size_t>(j)] / tau, 0.0, 1.0);
    std::vector<int> scan(permutation.rbegin(), permutation.rend());

    double total = 0.0;
    const std::uint32_t patterns = n >= 32 ? 0 : (std::uint32_t{1} << n);
    for (std::uint32_t mask = 0; mask < patterns; ++mask) {
        double prob = 1.0;
        for (int j = 0; j < n && prob > 0.0; ++j)
            prob *= (mask >> j & 1) ? p[static_cast<std::size_t>(j)]
                                    : 1.0 - p[static_cast<std::size_t>(j)];
        if (prob <= 0.0) continue;
        std::uint64_t in_i = 0;
        double wsum = 0.0;
        for (int v : scan) {
            if (!(mask >> v & 1)) continue;
            if (adj[static_cast<std::size_t>(v)] & in_i) continue;
            in_i |= std::uint64_t{1} << v;
            wsum += weights[static_cast<std::size_t>(v)];
        }
        total += prob * wsum;
    }
    return total;
}

} // namespace geomis::oracle
