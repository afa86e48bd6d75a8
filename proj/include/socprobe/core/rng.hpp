#pragma once

#include <cstdint>
#include <vector>

#include "socprobe/core/errors.hpp"

namespace socprobe {

// SplitMix64. Chosen over <random> engines because traces must be
// bit-identical across standard libraries, and std:: distributions are not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // Uniform in [0, n). Debiased by rejection; deterministic everywhere.
    std::uint64_t bounded(std::uint64_t n) {
        if (n == 0) throw ValidationError("bounded(0)");
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Index drawn from non-negative weights (sum > 0).
    std::size_t weighted_index(const std::vector<double>& weights, double total) {
        double x = next_double() * total;
        double acc = 0.0;
        for (std::size_t i = 0; i < weights.size(); ++i) {
            acc += weights[i];
            if (x < acc) return i;
        }
        return weights.size() - 1;  // only via rounding at the top edge
    }

private:
    std::uint64_t state_;
};

inline std::uint64_t mix_u64(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
    h ^= h >> 33;
    return h;
}

// Independent stream for (a, b) under a master seed. Adding agents or
// ticks never perturbs another (agent, tick) stream.
inline Rng substream(std::uint64_t master_seed, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix_u64(master_seed, 0x5bf0f6858f1adb7aULL);
    h = mix_u64(h, a + 1);
    h = mix_u64(h, b + 1);
    return Rng(h);
}

}  // namespace socprobe
