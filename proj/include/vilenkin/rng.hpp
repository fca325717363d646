#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace vilenkin {

/// Deterministic random source. The uniform path maps raw mt19937_64
/// output through exact scaling only, so identical seeds reproduce
/// identical streams everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Uniform in [-1, 1).
    double uniform_sym() { return 2.0 * uniform01() - 1.0; }

    std::complex<double> complex_uniform() {
        const double re = uniform_sym();
        const double im = uniform_sym();
        return {re, im};
    }

    /// Standard normal via Box-Muller on the uniform stream.
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        const double u1 = 1.0 - uniform01();  // (0, 1]
        const double u2 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.141592653589793238462643383279502884 * u2;
        cached_ = radius * std::sin(angle);
        have_cached_ = true;
        return radius * std::cos(angle);
    }

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

private:
    std::mt19937_64 engine_;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

}  // namespace vilenkin
