#include "geomis/generator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "geomis/rng.hpp"

namespace geomis {

ShapeKind shape_kind_from_name(const std::string& name) {
    if (name == "disks") return ShapeKind::Disks;
    if (name == "rects") return ShapeKind::Rects;
    if (name == "squares") return ShapeKind::Squares;
    throw std::runtime_error("unknown shape kind: " + name);
}

namespace {

constexpr double kSizeLo = 0.5;
constexpr double kSizeHi = 2.0;

// moments of the log-uniform size factor on [1/2, 2]
double logu_mean() {
    double L = std::log(kSizeHi / kSizeLo);
    return (kSizeHi - kSizeLo) / L;
}
double logu_mean_sq() {
    double L = std::log(kSizeHi / kSizeLo);
    return (kSizeHi * kSizeHi - kSizeLo * kSizeLo) / (2.0 * L);
}

double draw_logu(Rng& rng) {
    return kSizeLo * std::exp(rng.next_double() * std::log(kSizeHi / kSizeLo));
}

} // namespace

Instance generate(const GenerateConfig& cfg) {
    if (cfg.n < 1) throw std::invalid_argument("generate needs n >= 1");
    if (!(cfg.density > 0.0)) throw std::invalid_argument("generate needs density > 0");

    // scale s so that (n-1) * P[two random shapes overlap] ~ density,
    // ignoring boundary clipping
    double pair_sum_sq = 2.0 * logu_mean_sq() + 2.0 * logu_mean() * logu_mean();
    double pairs = std::max(1, cfg.n - 1);
    double s = 0.0;
    switch (cfg.kind) {
        case ShapeKind::Disks:
            s = std::sqrt(cfg.density / (pairs * std::numbers::pi * pair_sum_sq));
            break;
        case ShapeKind::Rects: {
            double m = logu_mean();
            s = std::sqrt(cfg.density / (pairs * 16.0 * m * m));
            break;
        }
        case ShapeKind::Squares:
            s = std::sqrt(cfg.density / (pairs * 4.0 * pair_sum_sq));
            break;
    }

    Instance in;
    in.family = cfg.kind == ShapeKind::Disks ? Family::PseudoDisks : Family::Rectangles;
    Rng rng(cfg.seed);
    for (int i = 0; i < cfg.n; ++i) {
        double cx = rng.next_double();
        double cy = rng.next_double();
        WeightedObject o;
        o.id = i;
        switch (cfg.kind) {
            case ShapeKind::Disks:
                o.shape = Disk{cx, cy, s * draw_logu(rng)};
                break;
            case ShapeKind::Rects: {
                double hw = s * draw_logu(rng);
                double hh = s * draw_logu(rng);
                o.shape = AxisRect{cx - hw, cy - hh, cx + hw, cy + hh};
                break;
            }
            case ShapeKind::Squares: {
                double hw = s * draw_logu(rng);
                o.shape = AxisRect{cx - hw, cy - hw, cx + hw, cy + hw};
                break;
            }
        }
        o.weight = cfg.unit_weights ? 1.0 : rng.uniform(1.0, 10.0);
        in.objects.push_back(std::move(o));
    }
    for (int p = 0; p < cfg.num_points; ++p)
        in.points.push_back({rng.next_double(), rng.next_double()});
    return in;
}

} // namespace geomis
