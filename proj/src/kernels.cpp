#include "vilenkin/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace vilenkin {

double KernelProfile::max_ratio() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < shell_max.size(); ++i) {
        worst = std::max(worst, shell_max[i] / normalizer[i]);
    }
    return worst;
}

StepFunction dirichlet_kernel(const RadixStructure& s, std::int64_t n) {
    if (n < 1 || n > s.size()) {
        throw OutOfRange("Dirichlet kernel index outside [1, M_N]");
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(s.size()), Complex{0.0, 0.0});
    std::fill(coeffs.begin(), coeffs.begin() + n, Complex{1.0, 0.0});
    return inverse(Spectrum{s, std::move(coeffs)});
}

StepFunction fejer_kernel(const RadixStructure& s, std::int64_t n) {
    if (n < 1 || n > s.size()) {
        throw OutOfRange("Fejer kernel index outside [1, M_N]");
    }
    // (1/n) sum_{k=1}^n D_k = sum_{j<n} (n-j)/n psi_j
    std::vector<Complex> coeffs(static_cast<std::size_t>(s.size()), Complex{0.0, 0.0});
    for (std::int64_t j = 0; j < n; ++j) {
        coeffs[static_cast<std::size_t>(j)] =
            static_cast<double>(n - j) / static_cast<double>(n);
    }
    return inverse(Spectrum{s, std::move(coeffs)});
}

namespace {

void check_block_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw OrderOutOfRange("alpha must lie in (0,1)");
    }
}

/// Weights A_{n-v}^{-alpha} for v in [lo, hi], returned as coeffs[v-lo].
std::vector<double> block_weights(std::int64_t n, std::int64_t lo, std::int64_t hi,
                                  double order) {
    const std::vector<double> table = detail::cesaro_recurrence(order, n - lo);
    std::vector<double> weights(static_cast<std::size_t>(hi - lo + 1));
    for (std::int64_t v = lo; v <= hi; ++v) {
        weights[static_cast<std::size_t>(v - lo)] = table[static_cast<std::size_t>(n - v)];
    }
    return weights;
}

}  // namespace

StepFunction tail_kernel(const RadixStructure& s, std::int64_t n, std::int64_t lo,
                         std::int64_t hi, double alpha) {
    check_block_alpha(alpha);
    if (lo < 0 || lo > hi || hi >= n || hi >= s.size()) {
        throw OutOfRange("tail kernel range must satisfy 0 <= lo <= hi < n, hi < M_N");
    }
    const std::vector<double> weights = block_weights(n, lo, hi, -alpha);
    std::vector<Complex> coeffs(static_cast<std::size_t>(s.size()), Complex{0.0, 0.0});
    for (std::int64_t v = lo; v <= hi; ++v) {
        coeffs[static_cast<std::size_t>(v)] = weights[static_cast<std::size_t>(v - lo)];
    }
    return inverse(Spectrum{s, std::move(coeffs)});
}

namespace detail {

int block_order(const RadixStructure& s, std::int64_t n) {
    if (n < 1 || n >= s.size()) {
        throw OutOfRange("n outside [1, M_N)");
    }
    int k = 0;
    while (s.cumulative(k + 1) <= n) ++k;
    return k;
}

}  // namespace detail

KernelProfile shell_profile(const RadixStructure& s, int k, std::int64_t n, double alpha) {
    check_block_alpha(alpha);
    if (k < 2 || k >= s.level()) {
        throw LevelOutOfRange("shell profile needs 2 <= k < N");
    }
    if (n < s.cumulative(k) || n >= s.cumulative(k + 1)) {
        throw OutOfRange("n must satisfy M_k <= n < M_{k+1}");
    }
    const std::int64_t lo = s.cumulative(k - 1);
    const std::int64_t hi = s.cumulative(k) - 1;
    const std::vector<double> weights = block_weights(n, lo, hi, -alpha);
    std::vector<Complex> coeffs(static_cast<std::size_t>(s.cumulative(k)), Complex{0.0, 0.0});
    for (std::int64_t v = lo; v <= hi; ++v) {
        coeffs[static_cast<std::size_t>(v)] = weights[static_cast<std::size_t>(v - lo)];
    }
    // The block kernel has spectral support below M_k, so the level-k
    // prefix grid resolves it exactly.
    const std::vector<Complex> kern = synthesize_on_prefix(s, k, coeffs);
    const std::int64_t m_k = s.cumulative(k);
    const std::int64_t full = s.size();

    KernelProfile profile;
    profile.k = k;
    profile.n = n;
    profile.alpha = alpha;
    long double abs_sum = 0.0L;
    for (const Complex& z : kern) {
        abs_sum += std::abs(z);
    }
    profile.l1_norm = static_cast<double>(abs_sum / m_k);
    for (int a = 1; a <= k - 1; ++a) {
        // Shell I_{A-1} \ I_A occupies the label block [M_k/M_A, M_k/M_{A-1}).
        const std::int64_t begin = m_k / s.cumulative(a);
        const std::int64_t end = m_k / s.cumulative(a - 1);
        double peak = 0.0;
        for (std::int64_t j = begin; j < end; ++j) {
            peak = std::max(peak, std::abs(kern[static_cast<std::size_t>(j)]));
        }
        profile.shell_max.push_back(peak);
        profile.normalizer.push_back(
            std::pow(static_cast<double>(s.cumulative(a)), 1.0 - alpha));
        profile.shell_count.push_back((end - begin) * (full / m_k));
    }
    return profile;
}

double dirichlet_combination_ratio(const RadixStructure& s, std::span<const double> coeffs) {
    const std::int64_t n = static_cast<std::int64_t>(coeffs.size());
    if (n < 1 || n > s.size()) {
        throw OutOfRange("coefficient count outside [1, M_N]");
    }
    long double sum_sq = 0.0L;
    for (double a : coeffs) {
        sum_sq += static_cast<long double>(a) * a;
    }
    if (sum_sq == 0.0L) {
        throw ZeroVector("all coefficients are zero");
    }
    // sum_{k=1}^n alpha_k D_k = sum_{j<n} (suffix sum of alpha from j) psi_j
    std::vector<Complex> spectral(static_cast<std::size_t>(s.size()), Complex{0.0, 0.0});
    long double suffix = 0.0L;
    for (std::int64_t j = n - 1; j >= 0; --j) {
        suffix += static_cast<long double>(coeffs[static_cast<std::size_t>(j)]);
        spectral[static_cast<std::size_t>(j)] = static_cast<double>(suffix);
    }
    const StepFunction combo = inverse(Spectrum{s, std::move(spectral)});
    long double abs_sum = 0.0L;
    for (const Complex& z : combo.values) {
        abs_sum += std::abs(z);
    }
    const double integral = static_cast<double>(abs_sum / s.size());
    return integral / (std::sqrt(static_cast<double>(n)) *
                       std::sqrt(static_cast<double>(sum_sq)));
}

namespace {

/// Evaluates max_x |(1/M_u) sum_u W(u) * (g(x+u) - c * g(x))| where W lives
/// on the level-u prefix grid, g on the level-g prefix grid (g_level <=
/// u_level), and both are exactly resolved there. The subtracted factor c
/// is 1 for the first identity and 0 for the second.
double reduced_correlation_max(const RadixStructure& s, int g_level,
                               std::span<const Complex> g_reps, int u_level,
                               std::span<const Complex> w_reps, bool subtract_center) {
    const std::int64_t g_count = s.cumulative(g_level);
    const std::int64_t u_count = s.cumulative(u_level);
    // Digit matrices for both prefix grids.
    std::vector<int> g_digits;
    if (g_level >= 1) {
        g_digits = detail::all_point_digits(s.prefix(g_level));
    }
    const std::vector<int> u_digits = detail::all_point_digits(s.prefix(u_level));
    std::vector<std::int64_t> g_place(static_cast<std::size_t>(g_level));
    for (int i = 0; i < g_level; ++i) {
        g_place[static_cast<std::size_t>(i)] = g_count / s.cumulative(i + 1);
    }

    double worst = 0.0;
    for (std::int64_t d = 0; d < g_count; ++d) {
        const int* dd = g_digits.data() + d * g_level;
        Complex acc{0.0, 0.0};
        for (std::int64_t u = 0; u < u_count; ++u) {
            const int* uu = u_digits.data() + u * u_level;
            std::int64_t shifted = 0;
            for (int i = 0; i < g_level; ++i) {
                shifted += ((dd[i] + uu[i]) % s.radix(i)) * g_place[static_cast<std::size_t>(i)];
            }
            Complex term = g_reps[static_cast<std::size_t>(shifted)];
            if (subtract_center) {
                term -= g_reps[static_cast<std::size_t>(d)];
            }
            acc += w_reps[static_cast<std::size_t>(u)] * term;
        }
        worst = std::max(worst, std::abs(acc) / static_cast<double>(u_count));
    }
    return worst;
}

/// Values of S_{M_level} f on the level-`level` prefix grid (level may be 0,
/// in which case the single value is f_hat(0)).
std::vector<Complex> partial_sum_reps(const Spectrum& spec, int level) {
    const std::int64_t count = spec.structure.cumulative(level);
    if (level == 0) {
        return {spec.coeffs[0]};
    }
    return synthesize_on_prefix(spec.structure, level,
                                std::span<const Complex>(spec.coeffs.data(),
                                                         static_cast<std::size_t>(count)));
}

}  // namespace

double partial_shift_residual(const StepFunction& f, int r, std::int64_t n, double alpha) {
    check_block_alpha(alpha);
    const RadixStructure& s = f.structure;
    const int k = detail::block_order(s, n);
    if (r < 0 || r > k - 2) {
        throw OutOfRange("identity needs 0 <= r <= k-2 where M_k <= n < M_{k+1}");
    }
    const std::int64_t lo = s.cumulative(r);
    const std::int64_t hi = s.cumulative(r + 1) - 1;
    // Weights A_{n-v-1}^{-alpha-1} on v in [M_r, M_{r+1}); the D_v sum
    // collapses to spectral coefficients w_j = sum_{v > j} weights[v].
    const std::vector<double> weights = block_weights(n - 1, lo, hi, -alpha - 1.0);
    std::vector<Complex> w_coeffs(static_cast<std::size_t>(hi + 1), Complex{0.0, 0.0});
    long double tail = 0.0L;
    for (std::int64_t j = hi; j >= 0; --j) {
        w_coeffs[static_cast<std::size_t>(j)] = static_cast<double>(tail);
        if (j >= lo) {
            tail += static_cast<long double>(weights[static_cast<std::size_t>(j - lo)]);
        }
    }
    const std::vector<Complex> w_reps = synthesize_on_prefix(s, r + 1, w_coeffs);
    const Spectrum spec = forward(f);
    const std::vector<Complex> g_reps = partial_sum_reps(spec, r);
    return reduced_correlation_max(s, r, g_reps, r + 1, w_reps, /*subtract_center=*/true);
}

double block_projection_residual(const StepFunction& f, int k, std::int64_t n, double alpha) {
    check_block_alpha(alpha);
    const RadixStructure& s = f.structure;
    if (k < 1 || k != detail::block_order(s, n)) {
        throw OutOfRange("identity needs k >= 1 with M_k <= n < M_{k+1}");
    }
    const std::int64_t lo = s.cumulative(k - 1);
    const std::int64_t hi = s.cumulative(k) - 1;
    const std::vector<double> weights = block_weights(n, lo, hi, -alpha);
    std::vector<Complex> w_coeffs(static_cast<std::size_t>(hi + 1), Complex{0.0, 0.0});
    for (std::int64_t v = lo; v <= hi; ++v) {
        w_coeffs[static_cast<std::size_t>(v)] = weights[static_cast<std::size_t>(v - lo)];
    }
    const std::vector<Complex> w_reps = synthesize_on_prefix(s, k, w_coeffs);
    const Spectrum spec = forward(f);
    const std::vector<Complex> g_reps = partial_sum_reps(spec, k - 1);
    return reduced_correlation_max(s, k - 1, g_reps, k, w_reps, /*subtract_center=*/false);
}

}  // namespace vilenkin
