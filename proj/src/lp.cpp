#include "geomis/lp.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

#include "geomis/arrangement.hpp"
#include "simplex.hpp"

namespace geomis {

double PackingLP::row_load(const Row& row, std::span<const double> x) const {
    double s = 0.0;
    for (int id : row.ids) s += x[static_cast<std::size_t>(id)];
    return s;
}

double PackingLP::max_load(std::span<const double> x) const {
    double mx = 0.0;
    for (const auto& row : rows) mx = std::max(mx, row_load(row, x));
    return mx;
}

std::string PackingLP::export_text() const {
    std::ostringstream os;
    os << "max:";
    for (double w : weights) os << " " << w;
    os << "\n";
    for (const auto& row : rows) {
        os << "<= 1 :";
        for (int id : row.ids) os << " " << id;
        os << "\n";
    }
    return os.str();
}

namespace {

void add_row(PackingLP& lp, std::map<std::vector<int>, bool>& seen,
             std::vector<int> ids, RowProvenance prov) {
    std::sort(ids.begin(), ids.end());
    if (ids.size() < 2) return;
    if (!seen.emplace(ids, true).second) return;  // duplicate constraint
    lp.rows.push_back({std::move(ids), prov});
}

} // namespace

PackingLP build_independent_set_lp(const Instance& in, GraphMode mode, double eps) {
    PackingLP lp;
    lp.n = in.size();
    lp.weights = in.weights();
    std::map<std::vector<int>, bool> seen;

    if (mode == GraphMode::Discrete) {
        if (in.points.empty()) throw MissingPoints{};
        for (const Point& p : in.points) {
            std::vector<int> cov;
            for (int i = 0; i < in.size(); ++i)
                if (contains_point(in.obj(i).shape, p, eps)) cov.push_back(i);
            add_row(lp, seen, std::move(cov), {RowProvenance::DiscretePoint, p, -1});
        }
        return lp;
    }

    ArrangementResult arr = arrangement_vertices(in, eps);
    lp.warnings = arr.warnings;
    for (auto& v : arr.vertices)
        add_row(lp, seen, v.covering, {RowProvenance::Vertex, v.p, -1});

    // one containment row per object: itself plus everything containing it
    for (int i = 0; i < in.size(); ++i) {
        std::vector<int> ids{i};
        for (int j = 0; j < in.size(); ++j)
            if (j != i && contains_shape(in.obj(j).shape, in.obj(i).shape, eps))
                ids.push_back(j);
        add_row(lp, seen, std::move(ids), {RowProvenance::Containment, Point{}, i});
    }
    return lp;
}

FractionalSolution solve_packing_lp(const PackingLP& lp, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
    FractionalSolution sol;

    detail::SimplexProblem prob;
    prob.n = lp.n;
    prob.c = lp.weights;
    prob.start_at_upper = false;

    // lazily grown active row set; each round adds the most violated rows
    std::vector<char> active(lp.rows.size(), 0);
    std::vector<double> x(static_cast<std::size_t>(lp.n), 0.0);
    bool limit_hit = false;
    for (int round = 0; round <= static_cast<int>(lp.rows.size()); ++round) {
        auto out = detail::simplex_solve(prob);
        limit_hit = limit_hit || out.iteration_limit;
        x = out.x;
        std::vector<std::pair<double, std::size_t>> violated;
        for (std::size_t r = 0; r < lp.rows.size(); ++r) {
            if (active[r]) continue;
            double load = lp.row_load(lp.rows[r], x);
            if (load > 1.0 + 1e-9) violated.push_back({-load, r});
        }
        if (violated.empty()) break;
        std::sort(violated.begin(), violated.end());
        std::size_t take = std::min<std::size_t>(violated.size(), 256);
        for (std::size_t k = 0; k < take; ++k) {
            std::size_t r = violated[k].second;
            active[r] = 1;
            prob.rows.push_back({lp.rows[r].ids, 1.0, 1.0});
        }
    }

    // uniform scale-down gives exact feasibility
    double mx = lp.max_load(x);
    if (mx > 1.0)
        for (double& v : x) v /= mx;
    for (double& v : x) v = std::clamp(v, 0.0, 1.0);

    sol.x = std::move(x);
    sol.value = 0.0;
    for (int j = 0; j < lp.n; ++j)
        sol.value += lp.weights[static_cast<std::size_t>(j)] * sol.x[static_cast<std::size_t>(j)];
    sol.max_row_violation = std::max(0.0, lp.max_load(sol.x) - 1.0);
    sol.iteration_limit_hit = limit_hit;
    return sol;
}

CoveringLP build_piercing_lp(const Instance& in, double eps) {
    CoveringLP lp;
    ArrangementResult arr = arrangement_vertices(in, eps);
    for (const auto& v : arr.vertices) {
        bool dup = false;
        for (const Point& q : lp.candidates)
            if (near(v.p, q, eps)) { dup = true; break; }
        if (!dup) lp.candidates.push_back(v.p);
    }
    // every object needs at least one candidate it contains
    for (int i = 0; i < in.size(); ++i) {
        bool covered = false;
        for (const Point& q : lp.candidates)
            if (contains_point(in.obj(i).shape, q, eps)) { covered = true; break; }
        if (!covered) lp.candidates.push_back(shape_centroid(in.obj(i).shape));
    }
    lp.covering.assign(static_cast<std::size_t>(in.size()), {});
    for (int i = 0; i < in.size(); ++i)
        for (std::size_t q = 0; q < lp.candidates.size(); ++q)
            if (contains_point(in.obj(i).shape, lp.candidates[q], eps))
                lp.covering[static_cast<std::size_t>(i)].push_back(static_cast<int>(q));
    return lp;
}

CoveringSolution solve_covering_lp(const CoveringLP& lp, double eps) {
    if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
    detail::SimplexProblem prob;
    prob.n = static_cast<int>(lp.candidates.size());
    prob.c.assign(static_cast<std::size_t>(prob.n), -1.0);
    prob.start_at_upper = true;  // y = 1 is feasible
    for (const auto& cov : lp.covering) prob.rows.push_back({cov, -1.0, -1.0});
    auto out = detail::simplex_solve(prob);

    CoveringSolution sol;
    sol.y = out.x;
    // scale up so every object is covered with no deficit
    double min_load = std::numeric_limits<double>::infinity();
    for (const auto& cov : lp.covering) {
        double load = 0.0;
        for (int q : cov) load += sol.y[static_cast<std::size_t>(q)];
        min_load = std::min(min_load, load);
    }
    if (!lp.covering.empty() && min_load < 1.0 && min_load > 0.0)
        for (double& v : sol.y) v = std::min(1.0, v / min_load);
    sol.value = 0.0;
    for (double v : sol.y) sol.value += v;
    sol.iteration_limit_hit = out.iteration_limit;
    return sol;
}

} // namespace geomis
