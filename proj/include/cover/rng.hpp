#pragma once

#include <cstdint>
#include <random>

namespace cover {

// All randomized components draw from mt19937_64 (a fixed, published
// algorithm) through the bounded helpers below. std::uniform_int_distribution
// is implementation-defined, so it is avoided: outputs must be reproducible
// across standard libraries.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

// splitmix64 finalizer, used to derive independent sub-streams
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// derive an independent stream, e.g. per restart or per sub-task
inline Rng derive_rng(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix64(seed ^ mix64(stream)));
}

// uniform in [0, bound) by rejection; portable and unbiased
inline std::uint64_t rng_below(Rng& rng, std::uint64_t bound) {
    if (bound <= 1) return 0;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

// uniform integer in [lo, hi] inclusive
inline long long rng_range(Rng& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// uniform double in [0, 1)
inline double rng_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace cover
