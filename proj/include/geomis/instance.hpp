#ifndef GEOMIS_INSTANCE_HPP
#define GEOMIS_INSTANCE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomis/geometry.hpp"

namespace geomis {

enum class Family { PseudoDisks, Admissible, Rectangles, Generic };

std::string family_name(Family f);
Family family_from_name(const std::string& name);

struct WeightedObject {
    int id = 0;
    Shape shape;
    double weight = 1.0;
};

struct Instance {
    std::vector<WeightedObject> objects;
    std::vector<Point> points;      // discrete point set P; may be empty
    Family family = Family::Generic;
    double rho = 6.0;               // union-complexity constant (pseudo-disks)
    int k = 0;                      // admissible: boundary crossing bound, even

    int size() const { return static_cast<int>(objects.size()); }
    const WeightedObject& obj(int id) const { return objects[static_cast<std::size_t>(id)]; }
    std::vector<double> weights() const;
    bool unit_weights() const;      // all weights equal
};

// ---- validation ------------------------------------------------------------

struct Violation {
    enum Kind {
        DuplicateId,
        NonContiguousIds,
        BadWeight,
        DegenerateShape,
        FamilyMismatch,   // e.g. family=Rectangles with a non-rect shape
        FamilyViolation,  // pseudo-disk pair crossing more than twice
        BadFamilyParam,   // rho <= 0 or odd/nonpositive k
    };
    Kind kind;
    int a = -1;
    int b = -1;
    std::string detail;
};

struct ValidateOptions {
    bool check_pseudo_disk_pairs = false;  // geometric family check, O(n^2)
    double eps = kGeomEps;
};

std::vector<Violation> validate(const Instance& in, const ValidateOptions& opts = {});

// ---- normalization ---------------------------------------------------------

enum class WeightMode { Unit, AsGiven };

Instance normalize_weights(const Instance& in, WeightMode mode);

// Removes every object that properly contains another object (keeping the
// inner one of each nested pair; of two identical shapes the larger id goes).
// Surviving objects are renumbered contiguously; `removed` reports original
// ids. Rejects weighted instances: the LP containment rows handle those.
struct StripResult {
    Instance instance;
    std::vector<int> removed;
    std::vector<int> kept;  // original id of each surviving object, by new id
};

StripResult strip_contained(const Instance& in, double eps = kGeomEps);

// ---- algorithm output ------------------------------------------------------

struct ObjectDecision {
    int id = -1;
    double coin = -1.0;    // uniform draw, -1 when derandomized
    bool clamped = false;  // x/tau exceeded 1
    bool in_c = false;
    bool in_i = false;
    double estimator = 0;  // pessimistic estimator after this decision
};

struct Trace {
    std::string algorithm;
    // local search
    int exchanges = 0;
    bool truncated = false;
    // LP rounding
    std::vector<int> permutation;  // extraction order, first = min resistance
    std::vector<double> etas;
    double tau = 0.0;
    std::uint64_t seed = 0;
    bool derandomized = false;
    std::vector<ObjectDecision> decisions;  // in scan order
    double estimator_initial = 0.0;
    double estimator_final = 0.0;
    // rectangles
    std::size_t g1_edges = 0;
    std::size_t g2_edges = 0;
    int num_colors = 0;
    std::vector<double> color_class_weights;
    double lp_value = 0.0;
    int depth_threshold = 0;  // the t used by the Z estimator

    std::string to_json() const;
};

struct SelectionResult {
    std::vector<int> chosen;  // sorted ids
    double total_weight = 0.0;
    Trace trace;

    std::string to_json() const;
};

SelectionResult selection_from_json(const std::string& text);

// ---- serialization ---------------------------------------------------------

std::string to_json(const Instance& in);
Instance instance_from_json(const std::string& text);
void save_instance(const Instance& in, const std::string& path);
Instance load_instance(const std::string& path);

} // namespace geomis

#endif
