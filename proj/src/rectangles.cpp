#include "geomis/rectangles.hpp"

#include <algorithm>
#include <cmath>

#include "geomis/arrangement.hpp"
#include "estimator.hpp"

namespace geomis {

namespace {

const AxisRect& rect_of(const Instance& in, int id) {
    const auto* r = std::get_if<AxisRect>(&in.obj(id).shape);
    if (!r) throw std::invalid_argument("object " + std::to_string(id) + " is not an axis rect");
    return *r;
}

// i precedes j: x-interval of i strictly inside j's, y-interval of j strictly
// inside i's (the crossing pattern, oriented)
bool precedes(const AxisRect& a, const AxisRect& b) {
    return a.x0 > b.x0 && a.x1 < b.x1 && b.y0 > a.y0 && b.y1 < a.y1;
}

} // namespace

EdgeSplit split_edges(const Instance& in, double eps) {
    if (in.family != Family::Rectangles)
        throw std::invalid_argument("split_edges requires family=rectangles");
    EdgeSplit out;
    int n = in.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!intersects(in.obj(i).shape, in.obj(j).shape, eps)) continue;
            int c = boundary_intersection_count(rect_of(in, i), rect_of(in, j), eps);
            (c == 4 ? out.g2 : out.g1).push_back({i, j});
        }
    }
    return out;
}

ChainColoring chain_color(const Instance& in, std::span<const int> ids,
                          const std::vector<std::pair<int, int>>& g2_edges,
                          double eps) {
    (void)eps;
    ChainColoring out;
    out.color.assign(static_cast<std::size_t>(in.size()), 0);
    if (ids.empty()) return out;
    std::vector<char> member(static_cast<std::size_t>(in.size()), 0);
    for (int id : ids) member[static_cast<std::size_t>(id)] = 1;

    std::vector<std::vector<int>> pred(static_cast<std::size_t>(in.size()));
    for (auto [a, b] : g2_edges) {
        if (!member[static_cast<std::size_t>(a)] || !member[static_cast<std::size_t>(b)]) continue;
        const AxisRect& ra = rect_of(in, a);
        const AxisRect& rb = rect_of(in, b);
        if (precedes(ra, rb)) pred[static_cast<std::size_t>(b)].push_back(a);
        else if (precedes(rb, ra)) pred[static_cast<std::size_t>(a)].push_back(b);
        else throw CycleDetected{};
    }

    // predecessors have strictly smaller x-width, so width order is a
    // topological order of the chain DAG
    std::vector<int> order(ids.begin(), ids.end());
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double wa = rect_of(in, a).x1 - rect_of(in, a).x0;
        double wb = rect_of(in, b).x1 - rect_of(in, b).x0;
        return wa != wb ? wa < wb : a < b;
    });
    for (int id : order) {
        int c = 1;
        for (int q : pred[static_cast<std::size_t>(id)])
            c = std::max(c, out.color[static_cast<std::size_t>(q)] + 1);
        out.color[static_cast<std::size_t>(id)] = c;
        out.num_colors = std::max(out.num_colors, c);
    }
    return out;
}

int max_depth(const Instance& in, std::span<const int> ids, double eps) {
    if (ids.empty()) return 0;
    std::vector<Point> cands;
    for (int id : ids) {
        const AxisRect& r = rect_of(in, id);
        cands.push_back({r.x0, r.y0});
        cands.push_back({r.x1, r.y0});
        cands.push_back({r.x1, r.y1});
        cands.push_back({r.x0, r.y1});
    }
    for (std::size_t a = 0; a < ids.size(); ++a)
        for (std::size_t b = a + 1; b < ids.size(); ++b) {
            if (!intersects(in.obj(ids[a]).shape, in.obj(ids[b]).shape, eps)) continue;
            try {
                for (Point p : boundary_intersections(in.obj(ids[a]).shape,
                                                      in.obj(ids[b]).shape, eps))
                    cands.push_back(p);
            } catch (const OverlappingBoundaries&) {
                // degenerate pair; its corners are already candidates
            }
        }
    int best = 0;
    for (Point p : cands) best = std::max(best, depth_at(in, ids, p, eps));
    return best;
}

namespace {

SelectionResult color_and_pick(const Instance& in, SelectionResult r,
                               const EdgeSplit& split, double lp_value,
                               const std::string& algo) {
    auto coloring = chain_color(in, r.chosen, split.g2);
    SelectionResult out;
    out.trace = std::move(r.trace);
    out.trace.algorithm = algo;
    out.trace.g1_edges = split.g1.size();
    out.trace.g2_edges = split.g2.size();
    out.trace.num_colors = coloring.num_colors;
    out.trace.lp_value = lp_value;
    if (r.chosen.empty()) return out;

    std::vector<double> cw(static_cast<std::size_t>(coloring.num_colors) + 1, 0.0);
    for (int id : r.chosen)
        cw[static_cast<std::size_t>(coloring.color[static_cast<std::size_t>(id)])] +=
            in.obj(id).weight;
    int best = 1;
    for (int c = 2; c <= coloring.num_colors; ++c)
        if (cw[static_cast<std::size_t>(c)] > cw[static_cast<std::size_t>(best)]) best = c;
    out.trace.color_class_weights.assign(cw.begin() + 1, cw.end());
    for (int id : r.chosen) {
        if (coloring.color[static_cast<std::size_t>(id)] == best) {
            out.chosen.push_back(id);
            out.total_weight += in.obj(id).weight;
        }
    }
    return out;
}

struct RectSetup {
    FractionalSolution sol;
    EdgeSplit split;
    ConflictGraph g1;
    RoundingConfig rc;
    ResistancePermutation perm;
};

RectSetup rect_setup(const Instance& in, const RoundingConfig& cfg,
                     const FractionalSolution* lp_sol) {
    if (in.family != Family::Rectangles)
        throw std::invalid_argument("the rectangle pipeline requires family=rectangles");
    RectSetup s;
    s.sol = lp_sol ? *lp_sol
                   : solve_packing_lp(build_independent_set_lp(in, GraphMode::Geometric));
    s.split = split_edges(in);
    s.g1 = graph_from_edges(in.size(), s.split.g1);
    s.rc = cfg;
    if (!s.rc.tau) s.rc.tau = auto_tau(in, cfg.c_tau);
    s.perm = resistance_permutation(s.g1, s.sol.x);
    return s;
}

} // namespace

SelectionResult rectangle_mwis(const Instance& in, const RoundingConfig& cfg,
                               const FractionalSolution* lp_sol) {
    RectSetup s = rect_setup(in, cfg, lp_sol);
    auto w = in.weights();
    SelectionResult r = cfg.derandomize
                            ? derandomized_round(s.g1, s.sol.x, w, s.perm, s.rc)
                            : randomized_round(s.g1, s.sol.x, w, s.perm, s.rc);
    return color_and_pick(in, std::move(r), s.split, s.sol.value, "rectangles");
}

SelectionResult derandomized_rectangle_mwis(const Instance& in, const RoundingConfig& cfg,
                                            const FractionalSolution* lp_sol) {
    RectSetup s = rect_setup(in, cfg, lp_sol);
    const double tau = *s.rc.tau;
    const int n = in.size();
    auto w = in.weights();

    auto arr = arrangement_vertices(in);
    const double num_vertices = std::max<double>(1.0, static_cast<double>(arr.vertices.size()));
    // smallest t with (e/t)^t |V(F)| <= 1/n, the Chernoff threshold of the
    // depth lemma
    int t = 1;
    while (t < 400 &&
           static_cast<double>(t) * (1.0 - std::log(static_cast<double>(t))) >
               -std::log(num_vertices * std::max(1, n)))
        ++t;

    // per penalized point: delta_p solving t = (1+delta_p) mu_p and the
    // running log of E[(1+delta_p)^(depth(p,C)-t) | decisions]
    struct PenaltyPoint {
        double delta = 0.0;
        double log1pd = 0.0;
        double logp = 0.0;
    };
    std::vector<PenaltyPoint> pts;
    std::vector<std::vector<int>> pts_of(static_cast<std::size_t>(n));
    std::vector<double> prob(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        prob[static_cast<std::size_t>(j)] =
            std::clamp(s.sol.x[static_cast<std::size_t>(j)] / tau, 0.0, 1.0);
    for (const auto& v : arr.vertices) {
        double mu = 0.0;
        for (int i : v.covering) mu += s.sol.x[static_cast<std::size_t>(i)];
        if (mu <= 1e-250) continue;  // no penalty mass
        PenaltyPoint pp;
        pp.delta = static_cast<double>(t) / mu - 1.0;
        pp.log1pd = std::log(static_cast<double>(t)) - std::log(mu);
        pp.logp = -static_cast<double>(t) * pp.log1pd;
        for (int i : v.covering) {
            pp.logp += std::log1p(pp.delta * prob[static_cast<std::size_t>(i)]);
            pts_of[static_cast<std::size_t>(i)].push_back(static_cast<int>(pts.size()));
        }
        pts.push_back(pp);
    }
    auto pval = [](double logp) { return std::exp(std::min(logp, 700.0)); };

    std::vector<int> scan(s.perm.order.rbegin(), s.perm.order.rend());
    detail::ContentionEstimator est(s.g1, s.sol.x, w, tau, scan);
    const double opt = s.sol.value;
    double penalty = 0.0;
    for (const auto& pp : pts) penalty += pval(pp.logp);
    double phi = est.phi() / t - opt * penalty;

    SelectionResult r;
    r.trace.algorithm = "rectangles-derand";
    r.trace.permutation = s.perm.order;
    r.trace.etas = s.perm.etas;
    r.trace.tau = tau;
    r.trace.derandomized = true;
    r.trace.depth_threshold = t;
    r.trace.estimator_initial = phi;

    for (int k = 0; k < n; ++k) {
        int j = scan[static_cast<std::size_t>(k)];
        auto [gh, gt] = est.deltas(j);
        double pen_h = 0.0, pen_t = 0.0;
        for (int q : pts_of[static_cast<std::size_t>(j)]) {
            const auto& pp = pts[static_cast<std::size_t>(q)];
            double undecided_term = std::log1p(pp.delta * prob[static_cast<std::size_t>(j)]);
            double old = pval(pp.logp);
            pen_h += pval(pp.logp + pp.log1pd - undecided_term) - old;
            pen_t += pval(pp.logp - undecided_term) - old;
        }
        double dh = gh / t - opt * pen_h;
        double dt = gt / t - opt * pen_t;
        bool heads = dh >= dt;
        bool joins = est.commit(j, heads, heads ? gh : gt);
        for (int q : pts_of[static_cast<std::size_t>(j)]) {
            auto& pp = pts[static_cast<std::size_t>(q)];
            pp.logp -= std::log1p(pp.delta * prob[static_cast<std::size_t>(j)]);
            if (heads) pp.logp += pp.log1pd;
        }
        phi += heads ? dh : dt;
        if (joins) r.total_weight += w[static_cast<std::size_t>(j)];
        r.trace.decisions.push_back({j, -1.0, est.clamped(j), heads, joins, phi});
    }
    r.trace.estimator_final = phi;
    for (int v = 0; v < n; ++v)
        if (est.in_i(v)) r.chosen.push_back(v);
    return color_and_pick(in, std::move(r), s.split, s.sol.value, "rectangles-derand");
}

} // namespace geomis
