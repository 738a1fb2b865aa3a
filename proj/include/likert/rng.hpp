#pragma once

#include <cmath>
#include <cstdint>

namespace likert {

/// SplitMix64 (Vigna / Steele et al.). Chosen over <random> engines because
/// the entire draw path, including the integer-to-double conversion below, is
/// pinned by this header: the same seed yields bit-identical streams on every
/// platform and standard library. Splittable, so simulations can fan out
/// independent substreams deterministically.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in (0, 1]. The open lower end keeps log() finite.
    double uniform01() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    /// Unit-exponential variate.
    double exponential() { return -std::log(uniform01()); }

    /// Independent substream derived from this stream.
    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

} // namespace likert
