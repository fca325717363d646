#pragma once

#include <cstdint>
#include <vector>

#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Cesaro numbers A_0^alpha .. A_n^alpha for a fixed real order.
///
/// Values follow the multiplicative recurrence A_j = A_{j-1} * (alpha+j)/j,
/// accumulated in extended precision and rounded to double per entry.
struct CesaroTable {
    double alpha;
    std::vector<double> values;

    std::int64_t max_index() const { return static_cast<std::int64_t>(values.size()) - 1; }
    double at(std::int64_t j) const { return values[static_cast<std::size_t>(j)]; }
};

namespace detail {

/// The recurrence for any real order, without the domain check; orders
/// <= -1 are needed internally for the Abel-transformed kernel weights.
std::vector<double> cesaro_recurrence(double alpha, std::int64_t n);

}  // namespace detail

/// Table of A_0^alpha .. A_n^alpha. The summation means require
/// alpha > -1; outside that range the numbers vanish or alternate and an
/// OrderOutOfRange error is raised.
CesaroTable cesaro_numbers(double alpha, std::int64_t n);

/// Max relative residual of A_n^alpha = sum_{k<=n} A_k^{alpha-1} over the
/// table range. `lower` must hold order alpha-1 at the same length.
double check_identity_sum(const CesaroTable& table, const CesaroTable& lower);

/// Max relative residual of A_n^alpha - A_{n-1}^alpha = A_n^{alpha-1}.
double check_identity_diff(const CesaroTable& table, const CesaroTable& lower);

/// A_n^alpha * Gamma(alpha+1) / n^alpha, which tends to 1 as n grows.
double asymptotic_ratio(double alpha, std::int64_t n);

/// Partial sum S_n f: synthesis of the first n coefficients (S_0 f = 0).
StepFunction partial_sum(const Spectrum& s, std::int64_t n);

/// Fejer mean: sum_{k=0}^n (1 - k/(n+1)) f_hat(k) psi_k.
StepFunction fejer_mean(const Spectrum& s, std::int64_t n);

/// Cesaro mean of the given order:
/// (1/A_n^order) * sum_{k=0}^n A_{n-k}^order f_hat(k) psi_k.
///
/// `order` is the actual summation order: pass a value in (-1,0) for the
/// negative-order means (an order written as -a with a in (0,1) is the
/// value -a here, not a).
StepFunction cesaro_mean(const Spectrum& s, std::int64_t n, double order);

}  // namespace vilenkin
