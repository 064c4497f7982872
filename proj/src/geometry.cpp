#include "geomis/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geomis {

double norm(Point p) { return std::hypot(p.x, p.y); }
double dist(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

namespace {

bool finite(double v) { return std::isfinite(v); }

double clamp(double v, double lo, double hi) { return std::max(lo, std::min(hi, v)); }

double point_segment_dist(Point p, Point a, Point b) {
    Point d = b - a;
    double len2 = dot(d, d);
    if (len2 <= 0.0) return dist(p, a);
    double t = clamp(dot(p - a, d) / len2, 0.0, 1.0);
    return dist(p, a + t * d);
}

std::vector<Point> rect_corners(const AxisRect& r) {
    return {{r.x0, r.y0}, {r.x1, r.y0}, {r.x1, r.y1}, {r.x0, r.y1}};
}

ConvexPolygon rect_as_polygon(const AxisRect& r) {
    return ConvexPolygon{rect_corners(r)};
}

// Closed boundary as a CCW list of vertices (rect or polygon).
struct EdgeList {
    std::vector<Point> v;
    std::size_t size() const { return v.size(); }
    Point a(std::size_t i) const { return v[i]; }
    Point b(std::size_t i) const { return v[(i + 1) % v.size()]; }
};

EdgeList edge_list(const Shape& s) {
    if (const auto* r = std::get_if<AxisRect>(&s)) return {rect_corners(*r)};
    const auto& p = std::get<ConvexPolygon>(s);
    return {p.pts};
}

// ---- separating axis test for convex polygons ----------------------------

void project(const std::vector<Point>& pts, Point axis, double& lo, double& hi) {
    lo = hi = dot(pts[0], axis);
    for (std::size_t i = 1; i < pts.size(); ++i) {
        double d = dot(pts[i], axis);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
}

bool poly_poly_intersects(const ConvexPolygon& p, const ConvexPolygon& q, double eps) {
    for (const auto* poly : {&p, &q}) {
        const auto& pts = poly->pts;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            Point e = pts[(i + 1) % pts.size()] - pts[i];
            double len = norm(e);
            if (len <= 0.0) continue;
            Point axis{-e.y / len, e.x / len};
            double alo, ahi, blo, bhi;
            project(p.pts, axis, alo, ahi);
            project(q.pts, axis, blo, bhi);
            if (alo > bhi + eps || blo > ahi + eps) return false;
        }
    }
    return true;
}

double point_to_polygon_dist(Point c, const ConvexPolygon& p, double eps) {
    if (contains_point(Shape{p}, c, eps)) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < p.pts.size(); ++i)
        best = std::min(best, point_segment_dist(c, p.pts[i], p.pts[(i + 1) % p.pts.size()]));
    return best;
}

// ---- boundary intersection primitives -------------------------------------

void push_dedup(std::vector<Point>& out, Point p, double eps) {
    for (const Point& q : out)
        if (near(p, q, std::max(eps, 10 * kGeomEps))) return;
    out.push_back(p);
}

void circle_circle(const Disk& a, const Disk& b, double eps, std::vector<Point>& out) {
    double d = dist(a.center(), b.center());
    if (d <= eps && std::abs(a.r - b.r) <= eps) throw OverlappingBoundaries{};
    if (d > a.r + b.r + eps) return;                    // too far apart
    if (d < std::abs(a.r - b.r) - eps) return;          // nested, boundaries apart
    Point u = (1.0 / d) * (b.center() - a.center());
    bool external = std::abs(d - (a.r + b.r)) <= eps;
    bool internal = std::abs(d - std::abs(a.r - b.r)) <= eps;
    if (external || internal) {
        // single touch point on the center line
        Point p = (external || a.r >= b.r) ? a.center() + a.r * u
                                           : a.center() - a.r * u;
        push_dedup(out, p, eps);
        return;
    }
    double t = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d);
    double h2 = a.r * a.r - t * t;
    double h = std::sqrt(std::max(0.0, h2));
    Point mid = a.center() + t * u;
    Point perp{-u.y, u.x};
    push_dedup(out, mid + h * perp, eps);
    push_dedup(out, mid - h * perp, eps);
}

void segment_circle(Point a, Point b, const Disk& d, double eps, std::vector<Point>& out) {
    Point dir = b - a;
    double len = norm(dir);
    if (len <= 0.0) return;
    Point rel = a - d.center();
    double qa = dot(dir, dir);
    double qb = 2.0 * dot(rel, dir);
    double qc = dot(rel, rel) - d.r * d.r;
    double disc = qb * qb - 4.0 * qa * qc;
    // tolerance on the discriminant scaled so a touch within eps of the
    // circle still counts
    double tol = 4.0 * qa * (2.0 * d.r * eps + eps * eps);
    if (disc < -tol) return;
    double teps = eps / len;
    if (disc <= tol) {
        double t = -qb / (2.0 * qa);
        if (t >= -teps && t <= 1.0 + teps) push_dedup(out, a + clamp(t, 0.0, 1.0) * dir, eps);
        return;
    }
    double root = std::sqrt(disc);
    for (double t : {(-qb - root) / (2.0 * qa), (-qb + root) / (2.0 * qa)})
        if (t >= -teps && t <= 1.0 + teps) push_dedup(out, a + clamp(t, 0.0, 1.0) * dir, eps);
}

void segment_segment(Point a, Point b, Point c, Point d, double eps, std::vector<Point>& out) {
    Point d1 = b - a, d2 = d - c;
    double l1 = norm(d1), l2 = norm(d2);
    if (l1 <= 0.0 || l2 <= 0.0) return;
    double denom = cross(d1, d2);
    if (std::abs(denom) <= eps * l1 * l2) {
        // parallel; collinear iff c lies on the line of ab
        if (std::abs(cross(d1, c - a)) > eps * l1) return;
        double t0 = dot(c - a, d1) / (l1 * l1);
        double t1 = dot(d - a, d1) / (l1 * l1);
        if (t0 > t1) std::swap(t0, t1);
        double lo = std::max(0.0, t0), hi = std::min(1.0, t1);
        if (hi - lo > eps / l1) throw OverlappingBoundaries{};
        if (hi >= lo - eps / l1) push_dedup(out, a + clamp(0.5 * (lo + hi), 0.0, 1.0) * d1, eps);
        return;
    }
    double t = cross(c - a, d2) / denom;
    double s = cross(c - a, d1) / denom;
    if (t >= -eps / l1 && t <= 1.0 + eps / l1 && s >= -eps / l2 && s <= 1.0 + eps / l2)
        push_dedup(out, a + clamp(t, 0.0, 1.0) * d1, eps);
}

} // namespace

bool shape_valid(const Shape& s, double eps) {
    if (const auto* d = std::get_if<Disk>(&s))
        return finite(d->cx) && finite(d->cy) && finite(d->r) && d->r > eps;
    if (const auto* r = std::get_if<AxisRect>(&s))
        return finite(r->x0) && finite(r->y0) && finite(r->x1) && finite(r->y1) &&
               r->x1 - r->x0 > eps && r->y1 - r->y0 > eps;
    const auto& p = std::get<ConvexPolygon>(s);
    std::size_t n = p.pts.size();
    if (n < 3) return false;
    for (const Point& q : p.pts)
        if (!finite(q.x) || !finite(q.y)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        Point e0 = p.pts[(i + 1) % n] - p.pts[i];
        Point e1 = p.pts[(i + 2) % n] - p.pts[(i + 1) % n];
        // strictly convex CCW, no three collinear
        if (cross(e0, e1) <= eps) return false;
    }
    return true;
}

Point shape_centroid(const Shape& s) {
    if (const auto* d = std::get_if<Disk>(&s)) return d->center();
    if (const auto* r = std::get_if<AxisRect>(&s))
        return {0.5 * (r->x0 + r->x1), 0.5 * (r->y0 + r->y1)};
    const auto& p = std::get<ConvexPolygon>(s).pts;
    double area2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        const Point& a = p[i];
        const Point& b = p[(i + 1) % p.size()];
        double w = cross(a, b);
        area2 += w;
        cx += (a.x + b.x) * w;
        cy += (a.y + b.y) * w;
    }
    if (std::abs(area2) <= 0.0) return p[0];
    return {cx / (3.0 * area2), cy / (3.0 * area2)};
}

bool contains_point(const Shape& s, Point p, double eps) {
    if (const auto* d = std::get_if<Disk>(&s))
        return dist(d->center(), p) <= d->r + eps;
    if (const auto* r = std::get_if<AxisRect>(&s))
        return p.x >= r->x0 - eps && p.x <= r->x1 + eps &&
               p.y >= r->y0 - eps && p.y <= r->y1 + eps;
    const auto& poly = std::get<ConvexPolygon>(s).pts;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        Point a = poly[i];
        Point e = poly[(i + 1) % poly.size()] - a;
        double len = norm(e);
        if (len <= 0.0) continue;
        if (cross(e, p - a) / len < -eps) return false;
    }
    return true;
}

bool intersects(const Shape& a, const Shape& b, double eps) {
    if (const auto* da = std::get_if<Disk>(&a)) {
        if (const auto* db = std::get_if<Disk>(&b))
            return dist(da->center(), db->center()) <= da->r + db->r + eps;
        if (const auto* rb = std::get_if<AxisRect>(&b)) {
            Point c{clamp(da->cx, rb->x0, rb->x1), clamp(da->cy, rb->y0, rb->y1)};
            return dist(c, da->center()) <= da->r + eps;
        }
        return point_to_polygon_dist(da->center(), std::get<ConvexPolygon>(b), eps) <=
               da->r + eps;
    }
    if (std::holds_alternative<Disk>(b)) return intersects(b, a, eps);
    if (const auto* ra = std::get_if<AxisRect>(&a)) {
        if (const auto* rb = std::get_if<AxisRect>(&b))
            return ra->x0 <= rb->x1 + eps && rb->x0 <= ra->x1 + eps &&
                   ra->y0 <= rb->y1 + eps && rb->y0 <= ra->y1 + eps;
        return poly_poly_intersects(rect_as_polygon(*ra), std::get<ConvexPolygon>(b), eps);
    }
    if (const auto* rb = std::get_if<AxisRect>(&b))
        return poly_poly_intersects(std::get<ConvexPolygon>(a), rect_as_polygon(*rb), eps);
    return poly_poly_intersects(std::get<ConvexPolygon>(a), std::get<ConvexPolygon>(b), eps);
}

bool contains_shape(const Shape& a, const Shape& b, double eps) {
    // inner shape is a disk: needs signed clearance from a's boundary
    if (const auto* db = std::get_if<Disk>(&b)) {
        if (const auto* da = std::get_if<Disk>(&a))
            return dist(da->center(), db->center()) + db->r <= da->r + eps;
        if (const auto* ra = std::get_if<AxisRect>(&a))
            return db->cx - db->r >= ra->x0 - eps && db->cx + db->r <= ra->x1 + eps &&
                   db->cy - db->r >= ra->y0 - eps && db->cy + db->r <= ra->y1 + eps;
        const auto& poly = std::get<ConvexPolygon>(a).pts;
        for (std::size_t i = 0; i < poly.size(); ++i) {
            Point e = poly[(i + 1) % poly.size()] - poly[i];
            double len = norm(e);
            if (len <= 0.0) continue;
            if (cross(e, db->center() - poly[i]) / len < db->r - eps) return false;
        }
        return true;
    }
    // inner shape is a convex polygon or rect: vertex containment suffices
    // because the container is convex
    std::vector<Point> verts;
    if (const auto* rb = std::get_if<AxisRect>(&b)) verts = rect_corners(*rb);
    else verts = std::get<ConvexPolygon>(b).pts;
    for (const Point& v : verts)
        if (!contains_point(a, v, eps)) return false;
    return true;
}

std::vector<Point> boundary_intersections(const Shape& a, const Shape& b, double eps) {
    std::vector<Point> out;
    const auto* da = std::get_if<Disk>(&a);
    const auto* db = std::get_if<Disk>(&b);
    if (da && db) {
        circle_circle(*da, *db, eps, out);
    } else if (da || db) {
        const Disk& d = da ? *da : *db;
        EdgeList edges = edge_list(da ? b : a);
        for (std::size_t i = 0; i < edges.size(); ++i)
            segment_circle(edges.a(i), edges.b(i), d, eps, out);
    } else {
        EdgeList ea = edge_list(a);
        EdgeList eb = edge_list(b);
        for (std::size_t i = 0; i < ea.size(); ++i)
            for (std::size_t j = 0; j < eb.size(); ++j)
                segment_segment(ea.a(i), ea.b(i), eb.a(j), eb.b(j), eps, out);
    }
    std::sort(out.begin(), out.end(), [](Point p, Point q) {
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    return out;
}

int boundary_intersection_count(const AxisRect& a, const AxisRect& b, double eps) {
    for (double xa : {a.x0, a.x1})
        for (double xb : {b.x0, b.x1})
            if (std::abs(xa - xb) <= eps)
                throw DegenerateRectPair("rectangles share a vertical edge line");
    for (double ya : {a.y0, a.y1})
        for (double yb : {b.y0, b.y1})
            if (std::abs(ya - yb) <= eps)
                throw DegenerateRectPair("rectangles share a horizontal edge line");
    int count = 0;
    // vertical edges of one against horizontal edges of the other; general
    // position makes every crossing transversal
    for (double x : {a.x0, a.x1})
        for (double y : {b.y0, b.y1})
            if (b.x0 < x && x < b.x1 && a.y0 < y && y < a.y1) ++count;
    for (double x : {b.x0, b.x1})
        for (double y : {a.y0, a.y1})
            if (a.x0 < x && x < a.x1 && b.y0 < y && y < b.y1) ++count;
    return count;
}

} // namespace geomis
