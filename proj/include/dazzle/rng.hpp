#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace dazzle {

/// splitmix64 finalizer; good bit avalanche, tiny, and stateless.
inline uint64_t mix64(uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derive a child seed from a parent seed and a stream index. Used for
/// per-sample and per-pixel streams so that draw order never matters.
inline uint64_t substream(uint64_t seed, uint64_t stream) {
    return mix64(seed ^ mix64(stream + 0x6a09e667f3bcc909ull));
}

/// Counter-based generator: one independent splitmix64 stream per
/// (seed, stream) pair. Results depend only on the key and how many
/// variates were drawn from this particular stream, never on what other
/// streams or threads are doing.
class StreamRng {
public:
    StreamRng(uint64_t seed, uint64_t stream) : state_(substream(seed, stream)) {}

    uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ull;
        uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (no cached spare: a fixed two-uniform
    /// cost per draw keeps stream consumption predictable).
    double normal() {
        const double u1 = uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log1p(-u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    /// Poisson variate. Knuth's product method; only suited to the small
    /// means used here (dark current ~1e-3 e-). Means above 30 fall back
    /// to a rounded-normal approximation.
    uint64_t poisson(double mean) {
        if (mean <= 0.0) return 0;
        if (mean > 30.0) {
            const double v = std::round(normal(mean, std::sqrt(mean)));
            return v < 0.0 ? 0 : static_cast<uint64_t>(v);
        }
        const double limit = std::exp(-mean);
        uint64_t k = 0;
        double prod = uniform();
        while (prod > limit) {
            ++k;
            prod *= uniform();
        }
        return k;
    }

private:
    uint64_t state_;
};

} // namespace dazzle
