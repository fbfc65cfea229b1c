#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qho/simulator.hpp"

namespace qho {

/// splitmix64 (Steele/Lea/Flood): a fixed 64-bit generator chosen because its
/// output is byte-identical across platforms and it splits cleanly for
/// per-job streams. next_double() maps the top 53 bits to [0, 1).
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

/// One splitmix64 step on x (increment + finalizer); used to fold values into
/// seeds. Unlike the bare finalizer this has no fixpoint at zero.
std::uint64_t mix64(std::uint64_t x);

/// Per-point stream seed for sweep jobs: folds the bit patterns of omega and t
/// into base_seed with mix64. Stable across platforms and run order.
std::uint64_t derive_seed(std::uint64_t base_seed, double omega, double t);

struct ShotCounts {
    std::vector<std::string> labels;
    std::vector<std::uint64_t> counts;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
};

/// Multinomial sampling by per-shot inverse-CDF lookup with SplitMix64(seed).
/// Deterministic: identical (d, shots, seed) give identical counts.
/// Requires shots > 0, probabilities nonnegative and summing to 1 within 1e-9.
ShotCounts sample_shots(const Distribution& d, std::uint64_t shots, std::uint64_t seed);

}  // namespace qho
