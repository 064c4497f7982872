#ifndef GEOMIS_GENERATOR_HPP
#define GEOMIS_GENERATOR_HPP

#include <cstdint>

#include "geomis/instance.hpp"

namespace geomis {

enum class ShapeKind { Disks, Rects, Squares };

ShapeKind shape_kind_from_name(const std::string& name);

struct GenerateConfig {
    ShapeKind kind = ShapeKind::Disks;
    int n = 10;
    double density = 2.0;  // target expected geometric degree
    std::uint64_t seed = 0;
    bool unit_weights = false;
    int num_points = 0;  // optional discrete point set size
};

// n shapes with centers uniform in the unit square and sizes log-uniform in
// [1/2, 2] of a scale chosen so the expected pairwise-overlap degree is about
// `density`. Weights uniform in [1, 10] unless unit_weights. Deterministic in
// the seed.
Instance generate(const GenerateConfig& cfg);

} // namespace geomis

#endif
