#include "simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace geomis::detail {

namespace {

constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-11;

} // namespace

SimplexOutcome simplex_solve(const SimplexProblem& p, long max_pivots) {
    const int n = p.n;
    const int m = static_cast<int>(p.rows.size());
    const int N = n + m;
    SimplexOutcome out;
    out.x.assign(static_cast<std::size_t>(n), p.start_at_upper ? 1.0 : 0.0);
    if (m == 0) {
        for (int j = 0; j < n; ++j) {
            out.x[static_cast<std::size_t>(j)] = p.c[static_cast<std::size_t>(j)] > 0 ? 1.0 : 0.0;
            out.value += p.c[static_cast<std::size_t>(j)] * out.x[static_cast<std::size_t>(j)];
        }
        return out;
    }

    std::vector<std::vector<int>> col(static_cast<std::size_t>(n));
    for (int r = 0; r < m; ++r)
        for (int j : p.rows[static_cast<std::size_t>(r)].ids)
            col[static_cast<std::size_t>(j)].push_back(r);
    auto coef_of = [&](int r) { return p.rows[static_cast<std::size_t>(r)].coef; };
    auto is_slack = [&](int var) { return var >= n; };
    auto cost = [&](int var) { return is_slack(var) ? 0.0 : p.c[static_cast<std::size_t>(var)]; };

    std::vector<std::vector<double>> binv(static_cast<std::size_t>(m),
                                          std::vector<double>(static_cast<std::size_t>(m), 0.0));
    for (int i = 0; i < m; ++i) binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1.0;
    std::vector<int> basis(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;
    std::vector<char> in_basis(static_cast<std::size_t>(N), 0);
    for (int i = 0; i < m; ++i) in_basis[static_cast<std::size_t>(n + i)] = 1;
    std::vector<char> at_upper(static_cast<std::size_t>(N), 0);
    if (p.start_at_upper)
        for (int j = 0; j < n; ++j) at_upper[static_cast<std::size_t>(j)] = 1;

    std::vector<double> xb(static_cast<std::size_t>(m)), y(static_cast<std::size_t>(m)),
        w(static_cast<std::size_t>(m));

    auto compute_xb = [&]() {
        std::vector<double> rhs(static_cast<std::size_t>(m));
        for (int r = 0; r < m; ++r) rhs[static_cast<std::size_t>(r)] = p.rows[static_cast<std::size_t>(r)].rhs;
        for (int j = 0; j < n; ++j)
            if (!in_basis[static_cast<std::size_t>(j)] && at_upper[static_cast<std::size_t>(j)])
                for (int r : col[static_cast<std::size_t>(j)])
                    rhs[static_cast<std::size_t>(r)] -= coef_of(r);
        for (int i = 0; i < m; ++i) {
            double v = 0.0;
            const auto& row = binv[static_cast<std::size_t>(i)];
            for (int r = 0; r < m; ++r) v += row[static_cast<std::size_t>(r)] * rhs[static_cast<std::size_t>(r)];
            xb[static_cast<std::size_t>(i)] = v;
        }
    };

    // rebuild binv from the basis columns (Gauss-Jordan with partial pivoting)
    auto refactorize = [&]() {
        std::vector<std::vector<double>> b(static_cast<std::size_t>(m),
                                           std::vector<double>(static_cast<std::size_t>(m), 0.0));
        for (int i = 0; i < m; ++i) {
            int var = basis[static_cast<std::size_t>(i)];
            if (is_slack(var)) {
                b[static_cast<std::size_t>(var - n)][static_cast<std::size_t>(i)] = 1.0;
            } else {
                for (int r : col[static_cast<std::size_t>(var)])
                    b[static_cast<std::size_t>(r)][static_cast<std::size_t>(i)] = coef_of(r);
            }
        }
        auto& inv = binv;
        for (int i = 0; i < m; ++i)
            for (int r = 0; r < m; ++r)
                inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] = i == r ? 1.0 : 0.0;
        for (int k = 0; k < m; ++k) {
            int piv = k;
            for (int i = k + 1; i < m; ++i)
                if (std::abs(b[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]) >
                    std::abs(b[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)]))
                    piv = i;
            if (std::abs(b[static_cast<std::size_t>(piv)][static_cast<std::size_t>(k)]) < kPivotTol)
                throw std::runtime_error("simplex: singular basis");
            std::swap(b[static_cast<std::size_t>(piv)], b[static_cast<std::size_t>(k)]);
            std::swap(inv[static_cast<std::size_t>(piv)], inv[static_cast<std::size_t>(k)]);
            double d = b[static_cast<std::size_t>(k)][static_cast<std::size_t>(k)];
            for (int r = 0; r < m; ++r) {
                b[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] /= d;
                inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] /= d;
            }
            for (int i = 0; i < m; ++i) {
                if (i == k) continue;
                double f = b[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
                if (f == 0.0) continue;
                for (int r = 0; r < m; ++r) {
                    b[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] -=
                        f * b[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
                    inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] -=
                        f * inv[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
                }
            }
        }
        // b is row-permuted during elimination; inv now holds B^-1 directly
    };

    compute_xb();

    bool bland = false;
    long stall = 0;
    double last_value = -std::numeric_limits<double>::infinity();
    long pivots = 0;
    for (; pivots < max_pivots; ++pivots) {
        for (int r = 0; r < m; ++r) {
            double v = 0.0;
            for (int i = 0; i < m; ++i) {
                double cb = cost(basis[static_cast<std::size_t>(i)]);
                if (cb != 0.0) v += cb * binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)];
            }
            y[static_cast<std::size_t>(r)] = v;
        }
        int enter = -1;
        double best_score = kDualTol;
        for (int j = 0; j < N; ++j) {
            if (in_basis[static_cast<std::size_t>(j)]) continue;
            double d = cost(j);
            if (is_slack(j)) {
                d -= y[static_cast<std::size_t>(j - n)];
            } else {
                for (int r : col[static_cast<std::size_t>(j)])
                    d -= y[static_cast<std::size_t>(r)] * coef_of(r);
            }
            double score = at_upper[static_cast<std::size_t>(j)] ? -d : d;
            if (score > best_score) {
                enter = j;
                if (bland) break;
                best_score = score;
            }
        }
        if (enter < 0) break;

        for (int i = 0; i < m; ++i) {
            double v = 0.0;
            if (is_slack(enter)) {
                v = binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter - n)];
            } else {
                for (int r : col[static_cast<std::size_t>(enter)])
                    v += binv[static_cast<std::size_t>(i)][static_cast<std::size_t>(r)] * coef_of(r);
            }
            w[static_cast<std::size_t>(i)] = v;
        }

        const double sigma = at_upper[static_cast<std::size_t>(enter)] ? -1.0 : 1.0;
        bool has_limit = !is_slack(enter);
        double t = has_limit ? 1.0 : 0.0;  // structural bound flip
        int leave = -1;
        for (int i = 0; i < m; ++i) {
            double coef = sigma * w[static_cast<std::size_t>(i)];
            double limit;
            if (coef > kPivotTol) {
                limit = std::max(0.0, xb[static_cast<std::size_t>(i)]) / coef;
            } else if (coef < -kPivotTol) {
                if (is_slack(basis[static_cast<std::size_t>(i)])) continue;
                limit = std::max(0.0, 1.0 - xb[static_cast<std::size_t>(i)]) / (-coef);
            } else {
                continue;
            }
            if (!has_limit || limit < t - 1e-12 ||
                (limit < t + 1e-12 && leave >= 0 &&
                 basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                has_limit = true;
                t = std::max(0.0, limit);
                leave = i;
            }
        }
        if (!has_limit) throw std::runtime_error("simplex: unbounded direction");

        if (leave < 0) {
            at_upper[static_cast<std::size_t>(enter)] ^= 1;
        } else {
            int lv = basis[static_cast<std::size_t>(leave)];
            double piv = w[static_cast<std::size_t>(leave)];
            at_upper[static_cast<std::size_t>(lv)] = sigma * piv > 0 ? 0 : 1;
            in_basis[static_cast<std::size_t>(lv)] = 0;
            in_basis[static_cast<std::size_t>(enter)] = 1;
            basis[static_cast<std::size_t>(leave)] = enter;
            auto& prow = binv[static_cast<std::size_t>(leave)];
            for (int r = 0; r < m; ++r) prow[static_cast<std::size_t>(r)] /= piv;
            for (int i = 0; i < m; ++i) {
                if (i == leave) continue;
                double f = w[static_cast<std::size_t>(i)];
                if (f == 0.0) continue;
                auto& row = binv[static_cast<std::size_t>(i)];
                for (int r = 0; r < m; ++r) row[static_cast<std::size_t>(r)] -= f * prow[static_cast<std::size_t>(r)];
            }
            if ((pivots + 1) % 128 == 0) refactorize();
        }
        compute_xb();

        double value = 0.0;
        for (int j = 0; j < n; ++j)
            if (!in_basis[static_cast<std::size_t>(j)] && at_upper[static_cast<std::size_t>(j)])
                value += p.c[static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i)
            if (!is_slack(basis[static_cast<std::size_t>(i)]))
                value += p.c[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] *
                         xb[static_cast<std::size_t>(i)];
        if (value > last_value + 1e-12) {
            last_value = value;
            stall = 0;
        } else if (++stall > 50L * (m + 1) && !bland) {
            bland = true;
        }
    }
    out.iteration_limit = pivots >= max_pivots;

    for (int j = 0; j < n; ++j)
        out.x[static_cast<std::size_t>(j)] =
            (!in_basis[static_cast<std::size_t>(j)] && at_upper[static_cast<std::size_t>(j)]) ? 1.0 : 0.0;
    for (int i = 0; i < m; ++i) {
        int var = basis[static_cast<std::size_t>(i)];
        if (!is_slack(var))
            out.x[static_cast<std::size_t>(var)] =
                std::clamp(xb[static_cast<std::size_t>(i)], 0.0, 1.0);
    }
    out.value = 0.0;
    for (int j = 0; j < n; ++j)
        out.value += p.c[static_cast<std::size_t>(j)] * out.x[static_cast<std::size_t>(j)];
    return out;
}

} // namespace geomis::detail
