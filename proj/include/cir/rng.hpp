#pragma once

#include <cmath>
#include <cstdint>

namespace cir {

// SplitMix64 output finalizer. All arithmetic mod 2^64; bit-exact on any
// conforming platform.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ULL;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBULL;
    x ^= x >> 31;
    return x;
}

// Per-replication seed stream: seed_i = mix64(base ^ (i * golden gamma)).
// Replication streams are decorrelated without any sequential dependency,
// so replications can be simulated in any order or in parallel.
constexpr std::uint64_t derive_replication_seed(std::uint64_t base_seed,
                                                std::uint64_t rep_index) noexcept {
    return mix64(base_seed ^ (rep_index * 0x9E3779B97F4A7C15ULL));
}

// SplitMix64 uniform generator.
class SplitMix64 {
  public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform on the open interval (0, 1): 53-bit mantissa, offset half an ulp
    // so 0 is never returned (log and division stay finite).
    double next_unit() noexcept {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

  private:
    std::uint64_t state_;
};

// Standard normal stream via the Marsaglia polar transform. The rejection
// step consumes a variable number of uniforms but the marginals are exact
// doubles; the accepted pair yields two normals, the second is cached.
class GaussianStream {
  public:
    explicit GaussianStream(std::uint64_t seed) noexcept : rng_(seed) {}

    double next() noexcept {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double v1, v2, s;
        do {
            v1 = 2.0 * rng_.next_unit() - 1.0;
            v2 = 2.0 * rng_.next_unit() - 1.0;
            s = v1 * v1 + v2 * v2;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v2 * f;
        has_spare_ = true;
        return v1 * f;
    }

  private:
    SplitMix64 rng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace cir
