#pragma once

#include <complex>
#include <cstdint>

namespace decolab {

/// Counter-based pseudorandom generator: the SplitMix64 output function
/// applied to seed + counter. Each draw is a pure function of (seed,
/// counter), so streams are reproducible across platforms and languages
/// and there is no global state. Statistical quality is ample for
/// scenario sampling; this is not a cryptographic generator.
class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
        : seed_(seed), counter_(counter) {}

    /// The raw PRF: SplitMix64 finalizer of seed + (counter+1)*golden.
    static std::uint64_t value_at(std::uint64_t seed, std::uint64_t counter) {
        std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t counter() const { return counter_; }

    /// Independent stream for a labeled sub-task of the same run.
    CounterRng fork(std::uint64_t stream) const {
        return CounterRng(value_at(seed_, 0xD1B54A32D192ED03ULL + stream), 0);
    }

    std::uint64_t next_u64() { return value_at(seed_, counter_++); }

    /// Uniform double in [0, 1), 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (two counter draws per call).
    double normal();

    /// Complex with independent N(0, 1/2) parts (unit mean square modulus).
    std::complex<double> complex_normal();

  private:
    std::uint64_t seed_;
    std::uint64_t counter_;
};

}  // namespace decolab
