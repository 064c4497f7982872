#ifndef GEOMIS_BENCH_HPP
#define GEOMIS_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "geomis/generator.hpp"
#include "geomis/instance.hpp"

namespace geomis {

struct IncompatibleAlgorithm : std::runtime_error {
    explicit IncompatibleAlgorithm(const std::string& why) : std::runtime_error(why) {}
};

struct ValidationFailed : std::runtime_error {
    explicit ValidationFailed(std::vector<Violation> v);
    std::vector<Violation> violations;
};

struct ResourceCap : std::runtime_error {
    explicit ResourceCap(const std::string& why) : std::runtime_error(why) {}
};

struct RunParams {
    std::string algorithm = "lp-round";
    std::optional<int> b;
    std::optional<double> tau;
    double c_tau = 13.0;
    double eps = 1e-4;
    std::uint64_t seed = 0;
    bool derandomize = false;
    bool with_oracle = false;
    std::optional<long long> max_exchanges;
};

struct RunReport {
    SelectionResult result;
    std::optional<double> lp_value;
    std::optional<double> oracle_value;
    double time_ms = 0.0;
    std::string to_json(const Instance& in) const;
};

// Validates, dispatches, re-verifies independence of the output against the
// graph the algorithm ran on. Throws ValidationFailed, IncompatibleAlgorithm
// or ResourceCap.
RunReport run_algorithm(const Instance& in, const RunParams& params);

struct BenchConfig {
    GenerateConfig corpus;  // corpus.seed is the master seed
    int count = 1;
    std::vector<std::string> algorithms;
    int trials = 1;
    int threads = 1;
    RunParams params;
};

// One CSV row per (instance, algorithm, trial) plus per-algorithm summary
// rows. Deterministic except for the time_ms column. Rows of failed
// combinations keep their key columns and leave the numeric fields empty.
std::string bench_csv(const BenchConfig& cfg);

// The same CSV with every time_ms field blanked, for determinism comparisons.
std::string strip_timing(const std::string& csv);

} // namespace geomis

#endif
