#ifndef GEOMIS_SIMPLEX_HPP
#define GEOMIS_SIMPLEX_HPP

#include <vector>

namespace geomis::detail {

// max c.x  s.t.  coef_r * sum_{j in ids_r} x_j <= rhs_r,  0 <= x_j <= 1.
// Bounded-variable primal simplex, dense basis inverse. Deterministic:
// Dantzig pricing with smallest-index ties, Bland's rule after a stall.
struct SimplexProblem {
    int n = 0;
    std::vector<double> c;
    struct Row {
        std::vector<int> ids;
        double coef = 1.0;  // +1 packing, -1 covering form
        double rhs = 1.0;
    };
    std::vector<Row> rows;
    bool start_at_upper = false;  // initial nonbasic structural bound
};

struct SimplexOutcome {
    std::vector<double> x;
    double value = 0.0;
    bool iteration_limit = false;
};

SimplexOutcome simplex_solve(const SimplexProblem& p, long max_pivots = 500000);

} // namespace geomis::detail

#endif
