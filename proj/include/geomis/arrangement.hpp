#ifndef GEOMIS_ARRANGEMENT_HPP
#define GEOMIS_ARRANGEMENT_HPP

#include <span>
#include <string>
#include <vector>

#include "geomis/instance.hpp"

namespace geomis {

// Sentinel for the second id of a rectangle-corner vertex.
inline constexpr int kCorner = -1;

struct ArrangementVertex {
    Point p;
    int i = 0;           // object whose boundary carries p
    int j = kCorner;     // second object, or kCorner for a rectangle corner
    std::vector<int> covering;  // sorted ids of all objects whose closed region contains p
};

struct ArrangementResult {
    std::vector<ArrangementVertex> vertices;  // sorted by (i, j, x, y)
    std::vector<std::string> warnings;        // degenerate pairs skipped
};

// All pairwise boundary-intersection points with their covering sets; for
// family=Rectangles additionally every rectangle corner.
ArrangementResult arrangement_vertices(const Instance& in, double eps = kGeomEps);

// Number of objects in `subset` whose closed region contains p.
int depth_at(const Instance& in, std::span<const int> subset, Point p,
             double eps = kGeomEps);

} // namespace geomis

#endif
