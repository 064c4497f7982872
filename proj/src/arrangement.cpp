#include "geomis/arrangement.hpp"

#include <algorithm>

namespace geomis {

namespace {

std::vector<int> covering_of(const Instance& in, Point p, double eps) {
    std::vector<int> cov;
    for (int k = 0; k < in.size(); ++k)
        if (contains_point(in.obj(k).shape, p, eps)) cov.push_back(k);
    return cov;
}

} // namespace

ArrangementResult arrangement_vertices(const Instance& in, double eps) {
    ArrangementResult res;
    int n = in.size();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!intersects(in.obj(i).shape, in.obj(j).shape, eps)) continue;
            try {
                for (Point p : boundary_intersections(in.obj(i).shape, in.obj(j).shape, eps))
                    res.vertices.push_back({p, i, j, covering_of(in, p, eps)});
            } catch (const OverlappingBoundaries&) {
                res.warnings.push_back("pair (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") has overlapping boundaries; skipped");
            }
        }
    }
    if (in.family == Family::Rectangles) {
        for (int i = 0; i < n; ++i) {
            if (const auto* r = std::get_if<AxisRect>(&in.obj(i).shape)) {
                for (Point p : {Point{r->x0, r->y0}, Point{r->x1, r->y0},
                                Point{r->x1, r->y1}, Point{r->x0, r->y1}})
                    res.vertices.push_back({p, i, kCorner, covering_of(in, p, eps)});
            }
        }
    }
    std::sort(res.vertices.begin(), res.vertices.end(),
              [](const ArrangementVertex& a, const ArrangementVertex& b) {
                  if (a.i != b.i) return a.i < b.i;
                  if (a.j != b.j) return a.j < b.j;
                  if (a.p.x != b.p.x) return a.p.x < b.p.x;
                  return a.p.y < b.p.y;
              });
    return res;
}

int depth_at(const Instance& in, std::span<const int> subset, Point p, double eps) {
    int d = 0;
    for (int id : subset)
        if (contains_point(in.obj(id).shape, p, eps)) ++d;
    return d;
}

} // namespace geomis
