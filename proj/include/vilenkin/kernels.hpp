#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vilenkin/cesaro.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Shell decomposition of a spectral-block kernel at level k.
///
/// Shell A (A = 1..k-1) is the annulus I_{A-1} \ I_A of points whose first
/// nonzero digit sits at position A-1; the shells partition G_m \ I_{k-1}.
/// Entries at position A-1 of the vectors below describe shell A.
struct KernelProfile {
    int k = 0;
    std::int64_t n = 0;
    double alpha = 0.0;
    std::vector<double> shell_max;          // max |kernel| over shell A
    std::vector<double> normalizer;         // M_A^{1-alpha}
    std::vector<std::int64_t> shell_count;  // grid points in shell A
    double l1_norm = 0.0;                   // integral of |kernel| over G_m

    double ratio(int a) const {
        return shell_max[static_cast<std::size_t>(a - 1)] /
               normalizer[static_cast<std::size_t>(a - 1)];
    }
    double max_ratio() const;
};

/// Dirichlet kernel D_n = sum_{k<n} psi_k sampled on the grid.
StepFunction dirichlet_kernel(const RadixStructure& s, std::int64_t n);

/// Fejer kernel K_n = (1/n) sum_{k=1}^{n} D_k sampled on the grid.
StepFunction fejer_kernel(const RadixStructure& s, std::int64_t n);

/// Weighted spectral block sum_{v=lo}^{hi} A_{n-v}^{-alpha} psi_v sampled
/// on the grid.
StepFunction tail_kernel(const RadixStructure& s, std::int64_t n, std::int64_t lo,
                         std::int64_t hi, double alpha);

/// Shell maxima, normalizers M_A^{1-alpha}, and the L1 norm of the block
/// kernel sum_{v=M_{k-1}}^{M_k-1} A_{n-v}^{-alpha} psi_v, for
/// M_k <= n < M_{k+1} and k >= 2. The kernel is synthesized on the level-k
/// prefix grid, on which it is exactly resolved, so no full-grid array is
/// materialized.
KernelProfile shell_profile(const RadixStructure& s, int k, std::int64_t n, double alpha);

/// Ratio of (1/n) * integral |sum_k alpha_k D_k| d(mu) to
/// (1/sqrt(n)) * (sum alpha_k^2)^{1/2}; coeffs[i] weights D_{i+1}.
double dirichlet_combination_ratio(const RadixStructure& s, std::span<const double> coeffs);

/// Max over x of | integral sum_{v=M_r}^{M_{r+1}-1} A_{n-v-1}^{-alpha-1}
/// D_v(u) * [S_{M_r}(x+u,f) - S_{M_r}(x,f)] d(mu)(u) |; zero up to rounding.
/// Requires r <= k-2 where M_k <= n < M_{k+1}.
double partial_shift_residual(const StepFunction& f, int r, std::int64_t n, double alpha);

/// Max over x of | integral sum_{v=M_{k-1}}^{M_k-1} A_{n-v}^{-alpha}
/// psi_v(u) * S_{M_{k-1}}(x+u,f) d(mu)(u) |; zero up to rounding.
/// Requires M_k <= n < M_{k+1}, k >= 1.
double block_projection_residual(const StepFunction& f, int k, std::int64_t n, double alpha);

namespace detail {

/// Order k with M_k <= n < M_{k+1}; requires 1 <= n < M_N.
int block_order(const RadixStructure& s, std::int64_t n);

}  // namespace detail

}  // namespace vilenkin
