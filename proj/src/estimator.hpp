#ifndef GEOMIS_ESTIMATOR_HPP
#define GEOMIS_ESTIMATOR_HPP

#include <algorithm>
#include <span>
#include <utility>
#include <vector>

#include "geomis/conflict_graph.hpp"

namespace geomis::detail {

// Bookkeeping for the pessimistic estimator of the reverse-scan rounding:
//   Phi = sum_{decided} w_j [j in I]
//       + sum_{undecided} w_j p_j max(0, 1 - sum_{k in B_j} s_k)
// with B_j the neighbors of j scanned before j, s_k = p_k while k is
// undecided, then 1 if k entered I and 0 otherwise. Objects must be decided
// in scan order, so B_j is always fully decided at j's turn.
class ContentionEstimator {
public:
    ContentionEstimator(const ConflictGraph& g, std::span<const double> x,
                        std::span<const double> weights, double tau,
                        std::span<const int> scan)
        : g_(g), w_(weights.begin(), weights.end()) {
        int n = g.n;
        p_.resize(static_cast<std::size_t>(n));
        clamped_.assign(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j) {
            double q = x[static_cast<std::size_t>(j)] / tau;
            clamped_[static_cast<std::size_t>(j)] = q > 1.0;
            p_[static_cast<std::size_t>(j)] = std::clamp(q, 0.0, 1.0);
        }
        rank_.assign(static_cast<std::size_t>(n), 0);
        for (int k = 0; k < n; ++k) rank_[static_cast<std::size_t>(scan[static_cast<std::size_t>(k)])] = k;
        s_val_ = p_;
        big_s_.assign(static_cast<std::size_t>(n), 0.0);
        i_before_.assign(static_cast<std::size_t>(n), 0);
        decided_.assign(static_cast<std::size_t>(n), 0);
        in_i_.assign(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < n; ++j)
            for (int u : g.neighbors(j))
                if (rank_[static_cast<std::size_t>(u)] < rank_[static_cast<std::size_t>(j)])
                    big_s_[static_cast<std::size_t>(j)] += s_val_[static_cast<std::size_t>(u)];
        phi_ = 0.0;
        for (int j = 0; j < n; ++j) phi_ += pending(j);
    }

    double phi() const { return phi_; }
    bool would_join(int j) const { return i_before_[static_cast<std::size_t>(j)] == 0; }
    bool in_i(int j) const { return in_i_[static_cast<std::size_t>(j)] != 0; }
    bool clamped(int j) const { return clamped_[static_cast<std::size_t>(j)] != 0; }

    // Phi change if j (next in scan) is put in C / left out of C.
    std::pair<double, double> deltas(int j) {
        bool join = would_join(j);
        double s_heads = join ? 1.0 : 0.0;
        double dh = -pending(j) + (join ? w_[static_cast<std::size_t>(j)] : 0.0);
        double dt = -pending(j);
        double sj = s_val_[static_cast<std::size_t>(j)];
        for (int u : later_neighbors(j)) {
            double before = pending(u);
            big_s_[static_cast<std::size_t>(u)] += s_heads - sj;
            dh += pending(u) - before;
            big_s_[static_cast<std::size_t>(u)] -= s_heads;
            dt += pending(u) - before;
            big_s_[static_cast<std::size_t>(u)] += sj;
        }
        return {dh, dt};
    }

    // Applies the branch; returns whether j entered I.
    bool commit(int j, bool heads, double delta) {
        bool join = heads && would_join(j);
        double new_s = heads && would_join(j) ? 1.0 : 0.0;
        for (int u : later_neighbors(j)) {
            big_s_[static_cast<std::size_t>(u)] += new_s - s_val_[static_cast<std::size_t>(j)];
            if (join) ++i_before_[static_cast<std::size_t>(u)];
        }
        s_val_[static_cast<std::size_t>(j)] = new_s;
        decided_[static_cast<std::size_t>(j)] = 1;
        in_i_[static_cast<std::size_t>(j)] = join;
        phi_ += delta;
        return join;
    }

private:
    double pending(int j) const {
        if (decided_[static_cast<std::size_t>(j)]) return 0.0;
        return w_[static_cast<std::size_t>(j)] * p_[static_cast<std::size_t>(j)] *
               std::max(0.0, 1.0 - big_s_[static_cast<std::size_t>(j)]);
    }

    std::vector<int> later_neighbors(int j) const {
        std::vector<int> out;
        for (int u : g_.neighbors(j))
            if (!decided_[static_cast<std::size_t>(u)] &&
                rank_[static_cast<std::size_t>(u)] > rank_[static_cast<std::size_t>(j)])
                out.push_back(u);
        return out;
    }

    const ConflictGraph& g_;
    std::vector<double> w_, p_, s_val_, big_s_;
    std::vector<int> rank_, i_before_;
    std::vector<char> decided_, in_i_, clamped_;
    double phi_ = 0.0;
};

} // namespace geomis::detail

#endif
