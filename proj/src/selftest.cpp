#include "vilenkin/selftest.hpp"

#include <cmath>

#include "vilenkin/approximation.hpp"
#include "vilenkin/kernels.hpp"
#include "vilenkin/rng.hpp"

namespace vilenkin {

namespace {

StepFunction random_function(const RadixStructure& s, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> values(static_cast<std::size_t>(s.size()));
    for (Complex& z : values) {
        z = rng.complex_uniform();
    }
    return StepFunction{s, std::move(values)};
}

StepFunction character_samples(const RadixStructure& s, std::int64_t n) {
    const MixedRadixIndex idx = index_digits(n, s);
    std::vector<Complex> values(static_cast<std::size_t>(s.size()));
    for (std::int64_t j = 0; j < s.size(); ++j) {
        values[static_cast<std::size_t>(j)] = vilenkin_char(idx, GroupPoint::from_label(s, j));
    }
    return StepFunction{s, std::move(values)};
}

void push(std::vector<CheckResult>& results, std::string name, double residual,
          double tolerance) {
    results.push_back({std::move(name), residual, tolerance, residual <= tolerance});
}

}  // namespace

std::vector<CheckResult> run_selftest(const RadixStructure& s, std::uint64_t seed) {
    std::vector<CheckResult> results;

    {
        double worst = 0.0;
        for (int r = 0; r <= s.level(); ++r) {
            const StepFunction d = dirichlet_kernel(s, s.cumulative(r));
            const std::int64_t inside = s.size() / s.cumulative(r);
            for (std::int64_t j = 0; j < s.size(); ++j) {
                const Complex expect =
                    j < inside ? Complex{static_cast<double>(s.cumulative(r)), 0.0}
                               : Complex{0.0, 0.0};
                worst = std::max(worst, std::abs(d.values[static_cast<std::size_t>(j)] - expect));
            }
        }
        push(results, "block Dirichlet kernels are scaled coset indicators", worst, 1e-10);
    }

    {
        double worst = 0.0;
        std::vector<std::int64_t> js;
        if (s.size() <= 1296) {
            for (std::int64_t j = 0; j < s.size(); ++j) js.push_back(j);
        } else {
            Rng rng(seed + 1);
            for (int i = 0; i < 128; ++i) {
                js.push_back(
                    static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(s.size()))));
            }
        }
        for (std::int64_t j : js) {
            const Spectrum spec = forward(character_samples(s, j));
            for (std::int64_t k = 0; k < s.size(); ++k) {
                const Complex expect = k == j ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
                worst = std::max(worst,
                                 std::abs(spec.coeffs[static_cast<std::size_t>(k)] - expect));
            }
        }
        push(results, "characters transform to unit vectors", worst, 1e-10);
    }

    {
        double round_worst = 0.0;
        double energy_worst = 0.0;
        for (std::uint64_t i = 0; i < 3; ++i) {
            const StepFunction f = random_function(s, seed + 10 + i);
            const Spectrum spec = forward(f);
            const StepFunction back = inverse(spec);
            for (std::size_t j = 0; j < back.values.size(); ++j) {
                round_worst = std::max(round_worst, std::abs(back.values[j] - f.values[j]));
            }
            long double grid = 0.0L;
            long double freq = 0.0L;
            for (const Complex& z : f.values) grid += std::norm(z);
            for (const Complex& z : spec.coeffs) freq += std::norm(z);
            grid /= static_cast<long double>(s.size());
            energy_worst =
                std::max(energy_worst, std::abs(static_cast<double>((freq - grid) / grid)));
        }
        push(results, "round trip reproduces the function", round_worst, 1e-10);
        push(results, "grid and spectral energies agree", energy_worst, 1e-10);
    }

    {
        const StepFunction f = random_function(s, seed + 20);
        const Spectrum spec = forward(f);
        Rng rng(seed + 21);
        const GroupPoint h = GroupPoint::from_label(
            s, static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(s.size()))));
        StepFunction g{s, std::vector<Complex>(f.values.size())};
        for (std::int64_t j = 0; j < s.size(); ++j) {
            g.values[static_cast<std::size_t>(j)] =
                f.values[static_cast<std::size_t>(add(GroupPoint::from_label(s, j), h).label())];
        }
        const Spectrum gspec = forward(g);
        double worst = 0.0;
        for (std::int64_t k = 0; k < s.size(); ++k) {
            const Complex expect =
                vilenkin_char(index_digits(k, s), h) * spec.coeffs[static_cast<std::size_t>(k)];
            worst = std::max(worst,
                             std::abs(gspec.coeffs[static_cast<std::size_t>(k)] - expect));
        }
        push(results, "translation modulates the spectrum", worst, 1e-10);
    }

    {
        double sum_worst = 0.0;
        double diff_worst = 0.0;
        double drift_worst = 0.0;
        const std::int64_t n = 10000;
        for (double alpha : {-0.75, -0.5, -0.25, 0.25, 0.5, 1.0}) {
            const CesaroTable table{alpha, detail::cesaro_recurrence(alpha, n)};
            const CesaroTable lower{alpha - 1.0, detail::cesaro_recurrence(alpha - 1.0, n)};
            sum_worst = std::max(sum_worst, check_identity_sum(table, lower));
            diff_worst = std::max(diff_worst, check_identity_diff(table, lower));
            const double budget =
                std::abs(alpha * (alpha + 1.0)) / static_cast<double>(n) + 1e-6;
            drift_worst = std::max(drift_worst,
                                   std::abs(asymptotic_ratio(alpha, n) - 1.0) / budget);
        }
        push(results, "Cesaro running-sum identity", sum_worst, 1e-12);
        push(results, "Cesaro difference identity", diff_worst, 1e-12);
        push(results, "Cesaro growth ratio drift over budget", drift_worst, 1.0);
    }

    if (s.level() >= 3) {
        Rng rng(seed + 30);
        double shift_worst = 0.0;
        double proj_worst = 0.0;
        for (int trial = 0; trial < 5; ++trial) {
            const StepFunction f = random_function(s, seed + 40 + static_cast<std::uint64_t>(trial));
            const int k_hi = std::min(4, s.level() - 1);
            const int k = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k_hi - 1)));
            const std::int64_t span = s.cumulative(k + 1) - s.cumulative(k);
            const std::int64_t n =
                s.cumulative(k) +
                static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(span)));
            const double alpha = 0.1 + 0.8 * rng.uniform01();
            const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
            shift_worst = std::max(shift_worst, partial_shift_residual(f, r, n, alpha));
            proj_worst = std::max(proj_worst, block_projection_residual(f, k, n, alpha));
        }
        push(results, "Dirichlet block annihilates shifted partial sums", shift_worst, 1e-10);
        push(results, "character block is orthogonal to lower modes", proj_worst, 1e-10);
    }

    return results;
}

}  // namespace vilenkin
