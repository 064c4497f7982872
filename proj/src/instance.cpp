#include "geomis/instance.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace geomis {

using nlohmann::json;

std::string family_name(Family f) {
    switch (f) {
        case Family::PseudoDisks: return "pseudo_disks";
        case Family::Admissible: return "admissible";
        case Family::Rectangles: return "rectangles";
        case Family::Generic: return "generic";
    }
    return "generic";
}

Family family_from_name(const std::string& name) {
    if (name == "pseudo_disks") return Family::PseudoDisks;
    if (name == "admissible") return Family::Admissible;
    if (name == "rectangles") return Family::Rectangles;
    if (name == "generic") return Family::Generic;
    throw std::runtime_error("unknown family: " + name);
}

std::vector<double> Instance::weights() const {
    std::vector<double> w;
    w.reserve(objects.size());
    for (const auto& o : objects) w.push_back(o.weight);
    return w;
}

bool Instance::unit_weights() const {
    for (const auto& o : objects)
        if (o.weight != objects.front().weight) return false;
    return true;
}

std::vector<Violation> validate(const Instance& in, const ValidateOptions& opts) {
    std::vector<Violation> out;
    std::set<int> seen;
    for (const auto& o : in.objects) {
        if (!seen.insert(o.id).second)
            out.push_back({Violation::DuplicateId, o.id, -1, "duplicate id"});
        if (!(o.weight > 0.0) || !std::isfinite(o.weight))
            out.push_back({Violation::BadWeight, o.id, -1, "weight must be positive and finite"});
        if (!shape_valid(o.shape, opts.eps))
            out.push_back({Violation::DegenerateShape, o.id, -1, "degenerate shape"});
        if (in.family == Family::Rectangles && !std::holds_alternative<AxisRect>(o.shape))
            out.push_back({Violation::FamilyMismatch, o.id, -1,
                           "family=rectangles requires axis rects"});
    }
    bool contiguous = static_cast<int>(seen.size()) == in.size();
    if (contiguous) {
        int expect = 0;
        for (int id : seen)
            if (id != expect++) { contiguous = false; break; }
    }
    if (!contiguous && out.empty())
        out.push_back({Violation::NonContiguousIds, -1, -1, "ids must be 0..n-1"});
    if (in.family == Family::PseudoDisks && !(in.rho > 0.0))
        out.push_back({Violation::BadFamilyParam, -1, -1, "rho must be positive"});
    if (in.family == Family::Admissible && (in.k <= 0 || in.k % 2 != 0))
        out.push_back({Violation::BadFamilyParam, -1, -1, "k must be a positive even integer"});

    if (opts.check_pseudo_disk_pairs && in.family == Family::PseudoDisks) {
        for (int i = 0; i < in.size(); ++i)
            for (int j = i + 1; j < in.size(); ++j) {
                try {
                    auto pts = boundary_intersections(in.obj(i).shape, in.obj(j).shape, opts.eps);
                    if (pts.size() > 2)
                        out.push_back({Violation::FamilyViolation, i, j,
                                       "boundaries cross more than twice"});
                } catch (const OverlappingBoundaries&) {
                    out.push_back({Violation::FamilyViolation, i, j,
                                   "boundaries overlap along a 1-D portion"});
                }
            }
    }
    return out;
}

Instance normalize_weights(const Instance& in, WeightMode mode) {
    if (mode == WeightMode::AsGiven) return in;
    Instance out = in;
    for (auto& o : out.objects) o.weight = 1.0;
    return out;
}

StripResult strip_contained(const Instance& in, double eps) {
    if (!in.unit_weights())
        throw std::invalid_argument(
            "strip_contained requires unit weights; weighted containment is "
            "handled by LP containment rows");
    int n = in.size();
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (!contains_shape(in.obj(i).shape, in.obj(j).shape, eps)) continue;
            bool mutual = contains_shape(in.obj(j).shape, in.obj(i).shape, eps);
            if (!mutual || j < i) {  // identical shapes: keep the smaller id
                removed[static_cast<std::size_t>(i)] = true;
                break;
            }
        }
    }
    StripResult res;
    res.instance = in;
    res.instance.objects.clear();
    for (int i = 0; i < n; ++i) {
        if (removed[static_cast<std::size_t>(i)]) {
            res.removed.push_back(i);
        } else {
            WeightedObject o = in.obj(i);
            res.kept.push_back(o.id);
            o.id = static_cast<int>(res.instance.objects.size());
            res.instance.objects.push_back(std::move(o));
        }
    }
    return res;
}

// ---- JSON ------------------------------------------------------------------

namespace {

json shape_to_json(const Shape& s) {
    if (const auto* d = std::get_if<Disk>(&s))
        return {{"type", "disk"}, {"cx", d->cx}, {"cy", d->cy}, {"r", d->r}};
    if (const auto* r = std::get_if<AxisRect>(&s))
        return {{"type", "rect"}, {"x0", r->x0}, {"y0", r->y0}, {"x1", r->x1}, {"y1", r->y1}};
    const auto& p = std::get<ConvexPolygon>(s);
    json pts = json::array();
    for (const Point& q : p.pts) pts.push_back({q.x, q.y});
    return {{"type", "polygon"}, {"pts", pts}};
}

Shape shape_from_json(const json& j) {
    std::string type = j.at("type");
    if (type == "disk")
        return Disk{j.at("cx"), j.at("cy"), j.at("r")};
    if (type == "rect")
        return AxisRect{j.at("x0"), j.at("y0"), j.at("x1"), j.at("y1")};
    if (type == "polygon") {
        ConvexPolygon p;
        for (const auto& q : j.at("pts")) p.pts.push_back({q.at(0), q.at(1)});
        return p;
    }
    throw std::runtime_error("unknown shape type: " + type);
}

} // namespace

std::string to_json(const Instance& in) {
    json j;
    j["family"] = family_name(in.family);
    if (in.family == Family::Admissible) j["k"] = in.k;
    if (in.family == Family::PseudoDisks && in.rho != 6.0) j["rho"] = in.rho;
    json objs = json::array();
    for (const auto& o : in.objects)
        objs.push_back({{"id", o.id}, {"weight", o.weight}, {"shape", shape_to_json(o.shape)}});
    j["objects"] = std::move(objs);
    if (!in.points.empty()) {
        json pts = json::array();
        for (const Point& p : in.points) pts.push_back({p.x, p.y});
        j["points"] = std::move(pts);
    }
    return j.dump();
}

Instance instance_from_json(const std::string& text) {
    json j = json::parse(text);
    Instance in;
    in.family = family_from_name(j.at("family"));
    if (j.contains("k")) in.k = j.at("k");
    if (j.contains("rho")) in.rho = j.at("rho");
    for (const auto& o : j.at("objects")) {
        WeightedObject w;
        w.id = o.at("id");
        w.weight = o.at("weight");
        w.shape = shape_from_json(o.at("shape"));
        in.objects.push_back(std::move(w));
    }
    if (j.contains("points"))
        for (const auto& p : j.at("points")) in.points.push_back({p.at(0), p.at(1)});
    return in;
}

void save_instance(const Instance& in, const std::string& path) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << to_json(in) << "\n";
}

Instance load_instance(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return instance_from_json(ss.str());
}

// ---- selection / trace JSON -------------------------------------------------

std::string Trace::to_json() const {
    json j;
    j["algorithm"] = algorithm;
    if (exchanges > 0) j["exchanges"] = exchanges;
    if (truncated) j["truncated"] = true;
    if (!permutation.empty()) {
        j["permutation"] = permutation;
        j["etas"] = etas;
        j["tau"] = tau;
        j["seed"] = seed;
        j["derandomized"] = derandomized;
        json ds = json::array();
        for (const auto& d : decisions)
            ds.push_back({{"id", d.id}, {"coin", d.coin}, {"clamped", d.clamped},
                          {"in_c", d.in_c}, {"in_i", d.in_i}, {"estimator", d.estimator}});
        j["decisions"] = std::move(ds);
        if (derandomized) {
            j["estimator_initial"] = estimator_initial;
            j["estimator_final"] = estimator_final;
        }
    }
    if (num_colors > 0) {
        j["g1_edges"] = g1_edges;
        j["g2_edges"] = g2_edges;
        j["num_colors"] = num_colors;
        j["color_class_weights"] = color_class_weights;
        if (depth_threshold > 0) j["depth_threshold"] = depth_threshold;
    }
    if (lp_value != 0.0) j["lp_value"] = lp_value;
    return j.dump();
}

std::string SelectionResult::to_json() const {
    json j;
    j["chosen"] = chosen;
    j["total_weight"] = total_weight;
    j["trace"] = json::parse(trace.to_json());
    return j.dump();
}

SelectionResult selection_from_json(const std::string& text) {
    json j = json::parse(text);
    SelectionResult r;
    r.chosen = j.at("chosen").get<std::vector<int>>();
    r.total_weight = j.at("total_weight");
    if (j.contains("trace")) {
        const json& t = j.at("trace");
        r.trace.algorithm = t.value("algorithm", "");
        r.trace.tau = t.value("tau", 0.0);
        r.trace.seed = t.value("seed", std::uint64_t{0});
        r.trace.derandomized = t.value("derandomized", false);
        if (t.contains("permutation"))
            r.trace.permutation = t.at("permutation").get<std::vector<int>>();
        if (t.contains("etas"))
            r.trace.etas = t.at("etas").get<std::vector<double>>();
    }
    return r;
}

} // namespace geomis
