#pragma once

#include <cstdint>

namespace isk4 {

// splitmix64 (Steele/Lea/Flood). Fixed algorithm so that seeded corpora
// reproduce bit-for-bit across platforms and implementations.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by modulo reduction; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // True with probability p: (next() >> 32) < floor(p * 2^32).
    bool bernoulli(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        const std::uint64_t threshold = static_cast<std::uint64_t>(p * 4294967296.0);
        return (next() >> 32) < threshold;
    }
};

}  // namespace isk4
