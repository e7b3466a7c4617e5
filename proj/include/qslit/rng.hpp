#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qslit {

/// splitmix64 step; used to derive well-separated per-cell seeds from a
/// master seed so parallel sweep cells stay reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Seeded generator with a fixed uniform-double extraction, so sampled
/// sequences do not depend on the standard library's distribution code.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t raw() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

/// Inverse-CDF sampler over a fixed discrete density. Weights need not be
/// normalized; negative rounding dust is clamped to zero.
class DiscreteSampler {
public:
    explicit DiscreteSampler(std::span<const double> weights);

    std::size_t sample(Rng& rng) const;
    double total_weight() const { return total_; }

private:
    std::vector<double> cdf_;
    double total_ = 0.0;
};

} // namespace qslit
