#include "vilenkin/cesaro.hpp"

#include <algorithm>
#include <cmath>

namespace vilenkin {

namespace detail {

std::vector<double> cesaro_recurrence(double alpha, std::int64_t n) {
    if (n < 0) {
        throw OutOfRange("table length must be nonnegative");
    }
    std::vector<double> values(static_cast<std::size_t>(n) + 1);
    long double acc = 1.0L;
    values[0] = 1.0;
    for (std::int64_t j = 1; j <= n; ++j) {
        acc *= (static_cast<long double>(alpha) + j) / j;
        values[static_cast<std::size_t>(j)] = static_cast<double>(acc);
    }
    return values;
}

}  // namespace detail

CesaroTable cesaro_numbers(double alpha, std::int64_t n) {
    if (!(alpha > -1.0)) {
        throw OrderOutOfRange("summation order must exceed -1");
    }
    return CesaroTable{alpha, detail::cesaro_recurrence(alpha, n)};
}

namespace {

void check_pair(const CesaroTable& table, const CesaroTable& lower) {
    if (table.values.size() != lower.values.size()) {
        throw LengthMismatch("tables must have equal length");
    }
    if (table.values.empty()) {
        throw LengthMismatch("tables must be nonempty");
    }
}

}  // namespace

double check_identity_sum(const CesaroTable& table, const CesaroTable& lower) {
    check_pair(table, lower);
    long double running = 0.0L;
    double worst = 0.0;
    for (std::size_t j = 0; j < table.values.size(); ++j) {
        running += static_cast<long double>(lower.values[j]);
        const long double residual =
            std::fabs(static_cast<long double>(table.values[j]) - running);
        worst = std::max(worst,
                         static_cast<double>(residual / std::fabs(table.values[j])));
    }
    return worst;
}

double check_identity_diff(const CesaroTable& table, const CesaroTable& lower) {
    check_pair(table, lower);
    double worst = 0.0;
    for (std::size_t j = 1; j < table.values.size(); ++j) {
        const long double residual = std::fabs(static_cast<long double>(table.values[j]) -
                                               static_cast<long double>(table.values[j - 1]) -
                                               static_cast<long double>(lower.values[j]));
        worst = std::max(worst,
                         static_cast<double>(residual / std::fabs(table.values[j])));
    }
    return worst;
}

double asymptotic_ratio(double alpha, std::int64_t n) {
    if (n < 1) {
        throw OutOfRange("asymptotic ratio needs n >= 1");
    }
    const std::vector<double> values = detail::cesaro_recurrence(alpha, n);
    return values.back() * std::tgamma(alpha + 1.0) /
           std::pow(static_cast<double>(n), alpha);
}

StepFunction partial_sum(const Spectrum& s, std::int64_t n) {
    s.validate();
    if (n < 0 || n > s.structure.size()) {
        throw OutOfRange("partial sum index outside [0, M_N]");
    }
    std::vector<Complex> weighted(s.coeffs.size(), Complex{0.0, 0.0});
    std::copy(s.coeffs.begin(), s.coeffs.begin() + n, weighted.begin());
    return inverse(Spectrum{s.structure, std::move(weighted)});
}

StepFunction fejer_mean(const Spectrum& s, std::int64_t n) {
    s.validate();
    if (n < 1 || n > s.structure.size() - 1) {
        throw OutOfRange("Fejer mean index outside [1, M_N - 1]");
    }
    std::vector<Complex> weighted(s.coeffs.size(), Complex{0.0, 0.0});
    for (std::int64_t k = 0; k <= n; ++k) {
        weighted[static_cast<std::size_t>(k)] =
            s.coeffs[static_cast<std::size_t>(k)] *
            (1.0 - static_cast<double>(k) / static_cast<double>(n + 1));
    }
    return inverse(Spectrum{s.structure, std::move(weighted)});
}

StepFunction cesaro_mean(const Spectrum& s, std::int64_t n, double order) {
    s.validate();
    if (!(order > -1.0)) {
        throw OrderOutOfRange("summation order must exceed -1");
    }
    if (n < 0 || n > s.structure.size() - 1) {
        throw OutOfRange("Cesaro mean index outside [0, M_N - 1]");
    }
    const std::vector<double> table = detail::cesaro_recurrence(order, n);
    const double norm = table[static_cast<std::size_t>(n)];
    std::vector<Complex> weighted(s.coeffs.size(), Complex{0.0, 0.0});
    for (std::int64_t k = 0; k <= n; ++k) {
        weighted[static_cast<std::size_t>(k)] =
            s.coeffs[static_cast<std::size_t>(k)] *
            (table[static_cast<std::size_t>(n - k)] / norm);
    }
    return inverse(Spectrum{s.structure, std::move(weighted)});
}

}  // namespace vilenkin
