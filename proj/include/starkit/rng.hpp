#pragma once

#include <cstdint>

namespace starkit {

// splitmix64-based generator. We roll our own instead of <random> because the
// verification reports must be byte-identical across platforms, and the
// standard distributions are implementation-defined.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // inclusive bounds
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

// Stable per-index sub-seed derivation for parallel trial streams.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    Rng r(master + 0x9e3779b97f4a7c15ull * (index + 1));
    return r.next_u64();
}

}  // namespace starkit
