#ifndef GEOMIS_RNG_HPP
#define GEOMIS_RNG_HPP

#include <cstdint>

namespace geomis {

// splitmix64 finalizer (Vigna). Full 64-bit avalanche, portable across
// platforms and compilers.
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Combine a seed with a stream index. Used everywhere a run needs a
// sub-stream: mix(seed, instance_index), mix(trial_seed, object_id), ...
inline std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    return splitmix64(splitmix64(a) ^ (b + 0x9e3779b97f4a7c15ULL));
}

inline std::uint64_t mix(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(mix(a, b), c);
}

// Sequential splitmix64 generator. State advances by the golden gamma, so
// the k-th output of Rng(s) equals splitmix64(s + k*gamma) -- counter based
// and reproducible regardless of call pattern elsewhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() { return splitmix64(state_++ * 0x9e3779b97f4a7c15ULL); }

    // uniform in [0,1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // uniform in [lo,hi)
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // uniform integer in [0,n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // independent child stream keyed by `key`
    Rng split(std::uint64_t key) const { return Rng(mix(state_, key)); }

private:
    std::uint64_t state_;
};

// One-shot coin for (trial, object) pairs: the coin of object `id` in trial
// seeded `trial_seed` is to_unit(mix(trial_seed, id)). Independent of scan
// order and of how many other coins were drawn.
inline double unit_coin(std::uint64_t trial_seed, std::uint64_t id) {
    return static_cast<double>(mix(trial_seed, id) >> 11) * 0x1.0p-53;
}

} // namespace geomis

#endif
