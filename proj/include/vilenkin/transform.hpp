#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "vilenkin/group.hpp"

namespace vilenkin {

using Complex = std::complex<double>;

/// Default cap on M_N for the quadratic-time oracle paths.
inline constexpr std::int64_t kOracleCap = 20736;

/// A complex function constant on level-N cosets, stored as M_N values.
/// Entry j is the value on the coset whose grid label is j.
struct StepFunction {
    RadixStructure structure;
    std::vector<Complex> values;

    /// Throws LengthMismatch / OutOfRange when the value array does not
    /// match the structure or contains non-finite entries.
    void validate() const;
};

/// The M_N Vilenkin-Fourier coefficients of a StepFunction; entry k is
/// f_hat(k) with k indexed by the generalized number system.
struct Spectrum {
    RadixStructure structure;
    std::vector<Complex> coeffs;

    void validate() const;
};

/// Generalized Rademacher function r_k(x) = exp(2*pi*i*x_k / m_k).
Complex rademacher(int k, const GroupPoint& x);

/// Vilenkin character psi_n(x) = prod_k r_k(x)^{n_k}; unit modulus.
Complex vilenkin_char(const MixedRadixIndex& n, const GroupPoint& x);

namespace detail {

/// Character value from raw digit vectors; the phase is accumulated as an
/// exact rational multiple of 2*pi before a single polar evaluation.
Complex char_from_digits(const RadixStructure& s, std::span<const int> n_digits,
                         std::span<const int> x_digits);

/// Digits of every grid label (big-endian place decomposition), as a flat
/// row-major M_N x N matrix.
std::vector<int> all_point_digits(const RadixStructure& s);

/// Digits of every index value (generalized number system), flat M_N x N.
std::vector<int> all_index_digits(const RadixStructure& s);

}  // namespace detail

/// Forward Vilenkin-Fourier transform: coeffs[k] = (1/M_N) * sum_j f_j *
/// conj(psi_k at coset j). Runs the staged mixed-radix factorization,
/// N stages of size-m_k exchanges, O(M_N * sum m_k) work.
Spectrum forward(const StepFunction& f);

/// Synthesis values[j] = sum_k coeffs[k] * psi_k(coset j); no normalization.
StepFunction inverse(const Spectrum& s);

/// Direct double-sum evaluation of the same quantity as forward; the
/// independent quadratic-time oracle. Errors with OracleCapExceeded when
/// M_N exceeds `cap`.
Spectrum forward_naive(const StepFunction& f, std::int64_t cap = kOracleCap);

/// Synthesis of `coeffs` (length <= M_k for some k <= N) on the prefix
/// structure at the given level: the result lists the function's values on
/// the M_level representatives of I_level cosets. Exact for any function
/// whose spectral support lies below M_level.
std::vector<Complex> synthesize_on_prefix(const RadixStructure& s, int level,
                                          std::span<const Complex> coeffs);

}  // namespace vilenkin
