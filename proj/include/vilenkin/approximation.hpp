#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "vilenkin/cesaro.hpp"
#include "vilenkin/transform.hpp"

namespace vilenkin {

/// Exponent token for the supremum norm.
inline constexpr double kInfinityExponent = std::numeric_limits<double>::infinity();

/// L^p norm on the grid: ((1/M_N) sum |f_j|^p)^{1/p}; max |f_j| for p = inf.
double lp_norm(const StepFunction& f, double p);

/// Modulus of continuity at scale 1/M_r: the exact supremum of
/// ||f(.+h) - f||_p over the M_N/M_r translations h in I_r that act
/// distinctly on level-N step functions. Costs (M_N/M_r) * M_N operations.
double modulus(const StepFunction& f, int r, double p);

/// The moduli omega(1/M_0) .. omega(1/M_N) for one norm exponent.
struct ModulusProfile {
    double p = 0.0;
    RadixStructure structure;
    std::vector<double> omegas;  // indexed by level r, size N+1

    double omega(int r) const { return omegas[static_cast<std::size_t>(r)]; }
};

/// Full modulus profiles for several exponents in a single sweep over all
/// M_N translations (the cost of the r = 0 level alone).
std::vector<ModulusProfile> modulus_profiles(const StepFunction& f, std::span<const double> ps);

ModulusProfile modulus_profile(const StepFunction& f, double p);

/// The modulus-weighted bound
///   M_k^alpha * omega(1/M_{k-1}) + sum_{r=0}^{k-2} (M_r/M_k) * omega(1/M_r)
/// evaluated from a measured profile; defined for k >= 2.
double modulus_bound(const ModulusProfile& profile, int k, double alpha);

/// || sigma_n^{-alpha} f - f ||_p for alpha in (0,1): the distance of the
/// negative-order Cesaro mean from f.
double approximation_error(const StepFunction& f, std::int64_t n, double alpha, double p);

/// Row of a convergence experiment: the measured error at one block level
/// against the modulus bound (without the unknowable constant).
struct ConvergenceRow {
    int k = 0;
    std::int64_t n = 0;
    double error = 0.0;
    double bound = 0.0;
    std::optional<double> ratio;  // absent when bound vanishes
};

/// Choice of n inside each block [M_k, M_{k+1}).
struct NPolicy {
    enum class Kind { BlockStart, BlockEnd, Random };
    Kind kind = Kind::BlockStart;
    std::uint64_t seed = 0;

    static NPolicy block_start() { return {Kind::BlockStart, 0}; }
    static NPolicy block_end() { return {Kind::BlockEnd, 0}; }
    static NPolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

/// One row per k in [k_lo, k_hi]; deterministic given the policy seed.
std::vector<ConvergenceRow> convergence_table(const StepFunction& f, double alpha, double p,
                                              int k_lo, int k_hi, NPolicy policy);

/// Shares one modulus sweep across several exponents; returns one table
/// per entry of ps, in order.
std::vector<std::vector<ConvergenceRow>> convergence_tables(const StepFunction& f, double alpha,
                                                            std::span<const double> ps, int k_lo,
                                                            int k_hi, NPolicy policy);

/// Lacunary witness: spectrum M_j^{-beta} at index M_j for j < N, zero
/// elsewhere; complex-valued synthesis (no real part taken).
StepFunction gen_lacunary(double beta, const RadixStructure& s);

/// Indicator of the level-r coset with the given label.
StepFunction gen_indicator(int r, std::int64_t label, const RadixStructure& s);

/// Seeded complex noise constant on level-r cosets; identical seeds give
/// identical functions on every platform.
StepFunction gen_random(std::uint64_t seed, int r, const RadixStructure& s);

}  // namespace vilenkin
