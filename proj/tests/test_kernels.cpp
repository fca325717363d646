#include <doctest.h>

#include <cmath>

#include "vilenkin/kernels.hpp"
#include "vilenkin/rng.hpp"

using namespace vilenkin;

namespace {

StepFunction random_function(const RadixStructure& s, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Complex> values(static_cast<std::size_t>(s.size()));
    for (Complex& z : values) {
        z = rng.complex_uniform();
    }
    return StepFunction{s, std::move(values)};
}

// Pointwise character sum; deliberately avoids the staged transform.
Complex dirichlet_direct(const RadixStructure& s, std::int64_t n, const GroupPoint& x) {
    Complex acc{0.0, 0.0};
    for (std::int64_t j = 0; j < n; ++j) {
        acc += vilenkin_char(index_digits(j, s), x);
    }
    return acc;
}

// Weights A_{n-v}^{order} from the factorial-quotient products.
double cesaro_weight_direct(double order, std::int64_t j) {
    double value = 1.0;
    for (std::int64_t i = 1; i <= j; ++i) {
        value *= (order + static_cast<double>(i)) / static_cast<double>(i);
    }
    return value;
}

double grid_average_abs(const StepFunction& f) {
    long double acc = 0.0L;
    for (const Complex& z : f.values) acc += std::abs(z);
    return static_cast<double>(acc / static_cast<long double>(f.values.size()));
}

Complex grid_integral(const StepFunction& f) {
    Complex acc{0.0, 0.0};
    for (const Complex& z : f.values) acc += z;
    return acc / static_cast<double>(f.values.size());
}

}  // namespace

TEST_CASE("lowest Dirichlet kernel is the constant one") {
    const RadixStructure s = RadixStructure::parse("2,3,2");
    const StepFunction d1 = dirichlet_kernel(s, 1);
    for (const Complex& z : d1.values) {
        CHECK(std::abs(z - Complex{1.0, 0.0}) < 1e-14);
    }
}

TEST_CASE("Dirichlet kernel at block sizes is a scaled coset indicator") {
    for (const char* spec_text : {"2,3,2,3", "3,3,3,3", "2,2,2,2,2,2"}) {
        const RadixStructure s = RadixStructure::parse(spec_text);
        for (int r = 0; r <= s.level(); ++r) {
            const StepFunction d = dirichlet_kernel(s, s.cumulative(r));
            const std::int64_t inside = s.size() / s.cumulative(r);
            for (std::int64_t j = 0; j < s.size(); ++j) {
                const Complex expect =
                    j < inside ? Complex{static_cast<double>(s.cumulative(r)), 0.0}
                               : Complex{0.0, 0.0};
                CHECK(std::abs(d.values[static_cast<std::size_t>(j)] - expect) <= 1e-10);
            }
        }
    }
}

TEST_CASE("Dirichlet kernels integrate to one and stay below n") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3");
    for (std::int64_t n = 1; n <= s.size(); ++n) {
        const StepFunction d = dirichlet_kernel(s, n);
        CHECK(std::abs(grid_integral(d) - Complex{1.0, 0.0}) < 1e-12);
        for (const Complex& z : d.values) {
            CHECK(std::abs(z) <= static_cast<double>(n) + 1e-10);
        }
    }
    CHECK_THROWS_AS(dirichlet_kernel(s, 0), OutOfRange);
    CHECK_THROWS_AS(dirichlet_kernel(s, s.size() + 1), OutOfRange);
}

TEST_CASE("Dirichlet kernel matches the direct character sum") {
    const RadixStructure s = RadixStructure::parse("2,3,2");
    for (std::int64_t n : {1, 2, 5, 7, 12}) {
        const StepFunction d = dirichlet_kernel(s, n);
        for (std::int64_t j = 0; j < s.size(); ++j) {
            CHECK(std::abs(d.values[static_cast<std::size_t>(j)] -
                           dirichlet_direct(s, n, GroupPoint::from_label(s, j))) < 1e-12);
        }
    }
}

TEST_CASE("averaged kernel integrates to one") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3");
    for (std::int64_t n : {1, 2, 7, 20, 36}) {
        const StepFunction k = fejer_kernel(s, n);
        CHECK(std::abs(grid_integral(k) - Complex{1.0, 0.0}) < 1e-12);
    }
    const StepFunction k1 = fejer_kernel(s, 1);
    for (const Complex& z : k1.values) {
        CHECK(std::abs(z - Complex{1.0, 0.0}) < 1e-14);
    }
}

TEST_CASE("averaged kernel is the running mean of Dirichlet kernels") {
    const RadixStructure s = RadixStructure::parse("2^4");
    const StepFunction k2 = fejer_kernel(s, 2);
    const StepFunction d1 = dirichlet_kernel(s, 1);
    const StepFunction d2 = dirichlet_kernel(s, 2);
    for (std::size_t j = 0; j < k2.values.size(); ++j) {
        CHECK(std::abs(k2.values[j] - 0.5 * (d1.values[j] + d2.values[j])) < 1e-13);
    }
}

TEST_CASE("block kernel with a single mode is constant") {
    const RadixStructure s = RadixStructure::parse("2,2,2,2,2");
    const std::int64_t n = 20;
    const StepFunction k = tail_kernel(s, n, 0, 0, 0.5);
    const double expect = cesaro_weight_direct(-0.5, n);
    for (const Complex& z : k.values) {
        CHECK(std::abs(z - Complex{expect, 0.0}) < 1e-12);
    }
}

TEST_CASE("block kernel at the origin sums its weights") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3");
    const std::int64_t n = 30;
    const std::int64_t lo = 6;
    const std::int64_t hi = 20;
    const double alpha = 0.3;
    const StepFunction k = tail_kernel(s, n, lo, hi, alpha);
    double expect = 0.0;
    for (std::int64_t v = lo; v <= hi; ++v) {
        expect += cesaro_weight_direct(-alpha, n - v);
    }
    CHECK(std::abs(k.values[0] - Complex{expect, 0.0}) < 1e-11);
}

TEST_CASE("block kernel matches direct summation") {
    const RadixStructure s = RadixStructure::parse("2^5");
    const std::int64_t n = s.cumulative(3);  // 8
    const StepFunction k = tail_kernel(s, n, s.cumulative(2), s.cumulative(3) - 1, 0.5);
    for (std::int64_t j = 0; j < s.size(); ++j) {
        const GroupPoint x = GroupPoint::from_label(s, j);
        Complex acc{0.0, 0.0};
        for (std::int64_t v = s.cumulative(2); v <= s.cumulative(3) - 1; ++v) {
            acc += cesaro_weight_direct(-0.5, n - v) * vilenkin_char(index_digits(v, s), x);
        }
        CHECK(std::abs(acc - k.values[static_cast<std::size_t>(j)]) < 1e-11);
    }
    CHECK_THROWS_AS(tail_kernel(s, 8, 4, 8, 0.5), OutOfRange);
    CHECK_THROWS_AS(tail_kernel(s, 8, 4, 7, 1.5), OrderOutOfRange);
}

TEST_CASE("shell decomposition covers the complement of the top coset") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3,2,3");
    const int k = 4;
    const KernelProfile profile = shell_profile(s, k, s.cumulative(k), 0.5);
    REQUIRE(profile.shell_max.size() == static_cast<std::size_t>(k - 1));
    std::int64_t covered = 0;
    for (std::int64_t count : profile.shell_count) {
        covered += count;
    }
    CHECK(covered == s.size() - s.size() / s.cumulative(k - 1));
    for (std::size_t i = 0; i < profile.shell_max.size(); ++i) {
        CHECK(profile.shell_max[i] >= 0.0);
        CHECK(std::isfinite(profile.ratio(static_cast<int>(i) + 1)));
    }
    CHECK(profile.l1_norm > 0.0);
}

TEST_CASE("shell maxima agree with a full-grid scan") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3");
    const int k = 3;
    const std::int64_t n = s.cumulative(3) + 3;
    const double alpha = 0.4;
    const KernelProfile profile = shell_profile(s, k, n, alpha);
    const StepFunction kern = tail_kernel(s, n, s.cumulative(k - 1), s.cumulative(k) - 1, alpha);
    for (int a = 1; a <= k - 1; ++a) {
        double peak = 0.0;
        std::int64_t count = 0;
        for (std::int64_t j = 0; j < s.size(); ++j) {
            const GroupPoint x = GroupPoint::from_label(s, j);
            bool zero_prefix = true;
            for (int i = 0; i < a - 1; ++i) {
                zero_prefix = zero_prefix && x.digit(i) == 0;
            }
            if (zero_prefix && x.digit(a - 1) != 0) {
                peak = std::max(peak, std::abs(kern.values[static_cast<std::size_t>(j)]));
                ++count;
            }
        }
        CHECK(profile.shell_max[static_cast<std::size_t>(a - 1)] ==
              doctest::Approx(peak).epsilon(1e-12));
        CHECK(profile.shell_count[static_cast<std::size_t>(a - 1)] == count);
        CHECK(profile.normalizer[static_cast<std::size_t>(a - 1)] ==
              doctest::Approx(std::pow(static_cast<double>(s.cumulative(a)), 1.0 - alpha)));
    }
    CHECK(profile.l1_norm == doctest::Approx(grid_average_abs(kern)).epsilon(1e-12));
    CHECK_THROWS_AS(shell_profile(s, 1, 3, 0.5), LevelOutOfRange);
    CHECK_THROWS_AS(shell_profile(s, 3, 5, 0.5), OutOfRange);
}

TEST_CASE("combination ratio base cases") {
    const RadixStructure s = RadixStructure::parse("2^6");
    const double one[1] = {1.0};
    CHECK(dirichlet_combination_ratio(s, one) == doctest::Approx(1.0).epsilon(1e-12));

    // All-ones coefficients make the ratio the L1 norm of the averaged kernel.
    for (std::int64_t n : {4, 16}) {
        std::vector<double> ones(static_cast<std::size_t>(n), 1.0);
        const double ratio = dirichlet_combination_ratio(s, ones);
        CHECK(ratio == doctest::Approx(grid_average_abs(fejer_kernel(s, n))).epsilon(1e-10));
    }

    const double zeros[3] = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(dirichlet_combination_ratio(s, zeros), ZeroVector);
}

TEST_CASE("combination ratio agrees with direct kernel accumulation") {
    const RadixStructure s = RadixStructure::parse("2,3,2");
    Rng rng(5);
    std::vector<double> coeffs(7);
    for (double& c : coeffs) c = rng.normal();
    const double ratio = dirichlet_combination_ratio(s, coeffs);

    double sum_sq = 0.0;
    for (double c : coeffs) sum_sq += c * c;
    long double abs_integral = 0.0L;
    for (std::int64_t j = 0; j < s.size(); ++j) {
        Complex acc{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            acc += coeffs[k] *
                   dirichlet_direct(s, static_cast<std::int64_t>(k) + 1, GroupPoint::from_label(s, j));
        }
        abs_integral += std::abs(acc);
    }
    const double n = static_cast<double>(coeffs.size());
    const double expect = static_cast<double>(abs_integral / s.size()) /
                          (std::sqrt(n) * std::sqrt(sum_sq));
    CHECK(ratio == doctest::Approx(expect).epsilon(1e-11));
}

namespace {

// Full-grid direct evaluation of the shifted-partial-sum residual; the
// couplings are built from character sums only.
double partial_shift_direct(const StepFunction& f, int r, std::int64_t n, double alpha) {
    const RadixStructure& s = f.structure;
    const std::int64_t total = s.size();
    const std::int64_t lo = s.cumulative(r);
    const std::int64_t hi = s.cumulative(r + 1) - 1;
    const Spectrum spec = forward_naive(f);

    std::vector<Complex> w(static_cast<std::size_t>(total));
    std::vector<Complex> g(static_cast<std::size_t>(total));
    for (std::int64_t u = 0; u < total; ++u) {
        const GroupPoint p = GroupPoint::from_label(s, u);
        Complex acc{0.0, 0.0};
        for (std::int64_t v = lo; v <= hi; ++v) {
            acc += cesaro_weight_direct(-alpha - 1.0, n - v - 1) * dirichlet_direct(s, v, p);
        }
        w[static_cast<std::size_t>(u)] = acc;
        Complex sum{0.0, 0.0};
        for (std::int64_t j = 0; j < lo; ++j) {
            sum += spec.coeffs[static_cast<std::size_t>(j)] *
                   vilenkin_char(index_digits(j, s), p);
        }
        g[static_cast<std::size_t>(u)] = sum;
    }

    double worst = 0.0;
    for (std::int64_t x = 0; x < total; ++x) {
        const GroupPoint px = GroupPoint::from_label(s, x);
        Complex acc{0.0, 0.0};
        for (std::int64_t u = 0; u < total; ++u) {
            const std::int64_t xu = add(px, GroupPoint::from_label(s, u)).label();
            acc += w[static_cast<std::size_t>(u)] *
                   (g[static_cast<std::size_t>(xu)] - g[static_cast<std::size_t>(x)]);
        }
        worst = std::max(worst, std::abs(acc) / static_cast<double>(total));
    }
    return worst;
}

double block_projection_direct(const StepFunction& f, int k, std::int64_t n, double alpha) {
    const RadixStructure& s = f.structure;
    const std::int64_t total = s.size();
    const std::int64_t lo = s.cumulative(k - 1);
    const std::int64_t hi = s.cumulative(k) - 1;
    const Spectrum spec = forward_naive(f);

    std::vector<Complex> w(static_cast<std::size_t>(total));
    std::vector<Complex> g(static_cast<std::size_t>(total));
    for (std::int64_t u = 0; u < total; ++u) {
        const GroupPoint p = GroupPoint::from_label(s, u);
        Complex acc{0.0, 0.0};
        for (std::int64_t v = lo; v <= hi; ++v) {
            acc += cesaro_weight_direct(-alpha, n - v) * vilenkin_char(index_digits(v, s), p);
        }
        w[static_cast<std::size_t>(u)] = acc;
        Complex sum{0.0, 0.0};
        for (std::int64_t j = 0; j < lo; ++j) {
            sum += spec.coeffs[static_cast<std::size_t>(j)] *
                   vilenkin_char(index_digits(j, s), p);
        }
        g[static_cast<std::size_t>(u)] = sum;
    }

    double worst = 0.0;
    for (std::int64_t x = 0; x < total; ++x) {
        const GroupPoint px = GroupPoint::from_label(s, x);
        Complex acc{0.0, 0.0};
        for (std::int64_t u = 0; u < total; ++u) {
            const std::int64_t xu = add(px, GroupPoint::from_label(s, u)).label();
            acc += w[static_cast<std::size_t>(u)] * g[static_cast<std::size_t>(xu)];
        }
        worst = std::max(worst, std::abs(acc) / static_cast<double>(total));
    }
    return worst;
}

}  // namespace

TEST_CASE("shifted partial sums are annihilated by the Dirichlet block") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3");
    const StepFunction f = random_function(s, 91);
    const std::int64_t n = s.cumulative(3) + 2;  // block order 3
    const double residual = partial_shift_residual(f, 1, n, 0.5);
    CHECK(residual <= 1e-10);
    // The reduced evaluation agrees with the full-grid direct sum.
    CHECK(std::abs(residual - partial_shift_direct(f, 1, n, 0.5)) < 1e-12);

    const StepFunction zero{s, std::vector<Complex>(static_cast<std::size_t>(s.size()),
                                                    Complex{0.0, 0.0})};
    CHECK(partial_shift_residual(zero, 0, n, 0.3) == 0.0);

    // A function fixed by the low partial sum leaves both terms identical.
    const StepFunction low = partial_sum(forward(f), s.cumulative(1));
    CHECK(partial_shift_residual(low, 1, n, 0.5) <= 1e-10);

    CHECK_THROWS_AS(partial_shift_residual(f, 2, n, 0.5), OutOfRange);
    CHECK_THROWS_AS(partial_shift_residual(f, 1, s.size(), 0.5), OutOfRange);
}

TEST_CASE("character blocks are orthogonal to lower partial sums") {
    const RadixStructure s = RadixStructure::parse("3,2,3,2");
    const StepFunction f = random_function(s, 92);
    const std::int64_t n = s.cumulative(2) + 1;
    const double residual = block_projection_residual(f, 2, n, 0.3);
    CHECK(residual <= 1e-10);
    CHECK(std::abs(residual - block_projection_direct(f, 2, n, 0.3)) < 1e-12);

    StepFunction one{s, std::vector<Complex>(static_cast<std::size_t>(s.size()),
                                             Complex{1.0, 0.0})};
    CHECK(block_projection_residual(one, 2, n, 0.3) <= 1e-12);

    // Polynomials below the block: residual stays at rounding level.
    const StepFunction low = partial_sum(forward(f), s.cumulative(1));
    CHECK(block_projection_residual(low, 2, n, 0.45) <= 1e-10);

    CHECK_THROWS_AS(block_projection_residual(f, 1, n, 0.3), OutOfRange);
}

TEST_CASE("zero identities hold across a randomized sweep") {
    const RadixStructure s = RadixStructure::parse("2,3,2,3");
    Rng rng(2024);
    for (int trial = 0; trial < 10; ++trial) {
        const StepFunction f = random_function(s, 100 + static_cast<std::uint64_t>(trial));
        const int k = 2 + static_cast<int>(rng.below(2));  // 2 or 3
        const std::int64_t span = s.cumulative(k + 1) - s.cumulative(k);
        const std::int64_t n =
            s.cumulative(k) + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(span)));
        const double alpha = 0.2 + 0.6 * rng.uniform01();
        const int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(k - 1)));
        CHECK(partial_shift_residual(f, r, n, alpha) <= 1e-10);
        CHECK(block_projection_residual(f, k, n, alpha) <= 1e-10);
    }
}
