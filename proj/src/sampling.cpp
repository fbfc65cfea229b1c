#include "qho/sampling.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qho {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base_seed, double omega, double t) {
    std::uint64_t h = base_seed;
    h = mix64(h ^ (std::bit_cast<std::uint64_t>(omega) + 0x9E3779B97F4A7C15ULL));
    h = mix64(h ^ (std::bit_cast<std::uint64_t>(t) + 0x9E3779B97F4A7C15ULL));
    return h;
}

ShotCounts sample_shots(const Distribution& d, std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw std::invalid_argument("shots: must be > 0");
    if (d.labels.size() != d.probabilities.size() || d.labels.empty())
        throw std::invalid_argument("distribution: labels/probabilities mismatch");
    double total = 0.0;
    for (double p : d.probabilities) {
        if (!std::isfinite(p) || p < 0.0)
            throw std::invalid_argument("distribution: probabilities must be >= 0");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw std::invalid_argument("distribution: probabilities must sum to 1");

    std::vector<double> cdf(d.probabilities.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < d.probabilities.size(); ++i) {
        acc += d.probabilities[i];
        cdf[i] = acc;
    }
    cdf.back() = total;  // guard the top bin against rounding

    ShotCounts out;
    out.labels = d.labels;
    out.counts.assign(d.labels.size(), 0);
    out.shots = shots;
    out.seed = seed;
    SplitMix64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = rng.next_double() * total;
        std::size_t lo = 0, hi = cdf.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (u < cdf[mid])
                hi = mid;
            else
                lo = mid + 1;
        }
        ++out.counts[lo];
    }
    return out;
}

}  // namespace qho
