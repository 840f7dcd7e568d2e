#pragma once

#include <cstdint>

namespace cyclex {

/// splitmix64. Fixed published constants so seeded corpora reproduce
/// bit-identically on any platform or language: the state advances by
/// 0x9E3779B97F4A7C15 per draw and the output mix multiplies by
/// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (Steele, Lea & Flood 2014).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1) with 53 significant bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform in [0, bound); bound > 0. Plain modulo: the tiny bias is
    /// irrelevant here and keeps the stream trivially reproducible.
    int next_below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

private:
    std::uint64_t state_;
};

}  // namespace cyclex
