#ifndef FAIRAUC_RNG_HPP
#define FAIRAUC_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

#include "fairauc/types.hpp"

namespace fairauc {

// Deterministic random source. Distribution transforms are implemented here
// (rather than via std:: distribution objects, whose output is
// implementation-defined) so that seeded runs are bit-reproducible.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    // Uniform on [0, 1) with 53-bit resolution.
    Scalar uniform() { return static_cast<Scalar>(eng_() >> 11) * 0x1.0p-53; }

    // Uniform on (0, 1); rejects the exact endpoints.
    Scalar uniform_pos() {
        Scalar u;
        do { u = uniform(); } while (u <= 0.0);
        return u;
    }

    Scalar uniform(Scalar lo, Scalar hi) { return lo + (hi - lo) * uniform(); }

    // Unbiased integer draw in [0, n).
    std::uint64_t uniform_index(std::uint64_t n) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = eng_(); } while (x >= limit);
        return x % n;
    }

    // Standard normal via Box-Muller; caches the second variate.
    Scalar normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const Scalar u1 = uniform_pos();
        const Scalar u2 = uniform();
        const Scalar r = std::sqrt(-2.0 * std::log(u1));
        const Scalar t = 2.0 * M_PI * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    // Gamma(shape, rate) via Marsaglia-Tsang squeeze; shape < 1 boosted
    // through the Gamma(shape+1) * U^(1/shape) identity.
    Scalar gamma(Scalar shape, Scalar rate) {
        if (shape < 1.0) {
            const Scalar u = uniform_pos();
            return gamma(shape + 1.0, rate) * std::pow(u, 1.0 / shape);
        }
        const Scalar d = shape - 1.0 / 3.0;
        const Scalar c = (1.0 / 3.0) / std::sqrt(d);
        for (;;) {
            Scalar x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const Scalar u = uniform_pos();
            if (u < 1.0 - 0.0331 * x * x * x * x) return d * v / rate;
            if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v)))
                return d * v / rate;
        }
    }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    Scalar spare_ = 0.0;
};

// splitmix64 step; used to derive independent per-round / per-purpose
// streams from one experiment seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

}  // namespace fairauc

#endif
