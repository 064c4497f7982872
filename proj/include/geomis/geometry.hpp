#ifndef GEOMIS_GEOMETRY_HPP
#define GEOMIS_GEOMETRY_HPP

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace geomis {

// Absolute tolerance for all geometric predicates. Closed-region semantics:
// boundaries that touch within this distance count as intersecting.
inline constexpr double kGeomEps = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point p) { return {s * p.x, s * p.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
double norm(Point p);
double dist(Point a, Point b);
inline bool near(Point a, Point b, double eps = kGeomEps) {
    return dist(a, b) <= eps;
}

struct Disk {
    double cx = 0.0;
    double cy = 0.0;
    double r = 0.0;
    Point center() const { return {cx, cy}; }
};

struct AxisRect {
    double x0 = 0.0;
    double y0 = 0.0;
    double x1 = 0.0;
    double y1 = 0.0;
};

// Vertices in CCW order, strictly convex, no three collinear.
struct ConvexPolygon {
    std::vector<Point> pts;
};

using Shape = std::variant<Disk, AxisRect, ConvexPolygon>;

// Boundaries share a 1-D portion (same circle, collinear overlapping edges).
struct OverlappingBoundaries : std::runtime_error {
    OverlappingBoundaries() : std::runtime_error("boundaries overlap along a 1-D portion") {}
};

// Rectangle pair with a shared edge line; the 0/2/4 crossing classification
// is undefined there.
struct DegenerateRectPair : std::runtime_error {
    explicit DegenerateRectPair(const std::string& what) : std::runtime_error(what) {}
};

bool shape_valid(const Shape& s, double eps = kGeomEps);
Point shape_centroid(const Shape& s);

bool contains_point(const Shape& s, Point p, double eps = kGeomEps);

// Closed-region intersection; tangency counts.
bool intersects(const Shape& a, const Shape& b, double eps = kGeomEps);

// true iff b is contained in a (closed containment, eps slack).
bool contains_shape(const Shape& a, const Shape& b, double eps = kGeomEps);

// All points where the boundary of a meets the boundary of b, sorted by
// (x, y). A tangency contributes one point. Throws OverlappingBoundaries
// when the boundaries share a 1-D portion.
std::vector<Point> boundary_intersections(const Shape& a, const Shape& b,
                                          double eps = kGeomEps);

// Number of transversal boundary crossings of two axis rectangles in general
// position: 0 (disjoint or nested), 2 (corner/edge overlap), or 4 (crossing).
// Throws DegenerateRectPair when the rectangles share an edge line.
int boundary_intersection_count(const AxisRect& a, const AxisRect& b,
                                double eps = kGeomEps);

} // namespace geomis

#endif
