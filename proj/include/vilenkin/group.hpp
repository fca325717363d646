#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "vilenkin/errors.hpp"

namespace vilenkin {

/// Mixed-radix skeleton of a bounded Vilenkin group truncated at level N.
///
/// Holds the radix sequence m_0..m_{N-1} (each >= 2) together with the
/// cumulative products M_0 = 1, M_{k+1} = m_k * M_k. All products are kept
/// in exact 64-bit arithmetic; an Overflow error is raised instead of
/// wrapping around.
class RadixStructure {
public:
    explicit RadixStructure(std::vector<int> radices);

    /// Parses a radix specification string: a comma list ("2,3,2,3") where
    /// each item may carry a repeat count ("2^10" = ten copies of 2,
    /// "2,3^4" = one 2 followed by four 3s).
    static RadixStructure parse(std::string_view spec);

    int level() const { return static_cast<int>(radices_.size()); }
    int radix(int k) const { return radices_[static_cast<std::size_t>(k)]; }
    std::span<const int> radices() const { return radices_; }
    int max_radix() const { return max_radix_; }

    /// M_k for 0 <= k <= level().
    std::int64_t cumulative(int k) const { return cumulative_[static_cast<std::size_t>(k)]; }
    std::span<const std::int64_t> cumulatives() const { return cumulative_; }

    /// Number of grid points M_N at the truncation level.
    std::int64_t size() const { return cumulative_.back(); }

    /// Grid-label place value of digit k: M_N / M_{k+1}.
    std::int64_t place(int k) const { return size() / cumulative(k + 1); }

    /// The structure truncated to its first `level` radices.
    RadixStructure prefix(int level) const;

    bool operator==(const RadixStructure& other) const { return radices_ == other.radices_; }
    bool operator!=(const RadixStructure& other) const { return !(*this == other); }

private:
    std::vector<int> radices_;
    std::vector<std::int64_t> cumulative_;
    int max_radix_ = 0;
};

/// A truncated group element: digit vector x_0..x_{N-1} with x_k in Z_{m_k}.
///
/// Grid labels order points big-endian: label = sum_k x_k * (M_N / M_{k+1}),
/// so the coset I_r(x) of points sharing the first r digits occupies the
/// contiguous label block [coset_index(x,r) * M_N/M_r, ...).
class GroupPoint {
public:
    GroupPoint(RadixStructure structure, std::vector<int> digits);

    /// The point whose grid label is `label` in [0, M_N).
    static GroupPoint from_label(const RadixStructure& structure, std::int64_t label);

    /// The identity element (all digits zero).
    static GroupPoint zero(const RadixStructure& structure);

    const RadixStructure& structure() const { return structure_; }
    int digit(int k) const { return digits_[static_cast<std::size_t>(k)]; }
    std::span<const int> digits() const { return digits_; }

    /// Full mixed-radix rank in [0, M_N); equals coset_index at level N.
    std::int64_t label() const;

    /// Bijective label in [0, M_r) of the coset I_r(x). Two points map to
    /// the same label iff their first r digits agree.
    std::int64_t coset_index(int r) const;

private:
    RadixStructure structure_;
    std::vector<int> digits_;
};

/// Digitwise modular sum (the group operation).
GroupPoint add(const GroupPoint& x, const GroupPoint& y);

/// Group inverse: digit k becomes (m_k - x_k) mod m_k.
GroupPoint neg(const GroupPoint& x);

/// A natural number n < M_N together with its digits in the generalized
/// number system, n = sum_j n_j M_j, and order |n| = max{k : n_k != 0}
/// (0 for n = 0).
class MixedRadixIndex {
public:
    MixedRadixIndex(RadixStructure structure, std::int64_t value);

    const RadixStructure& structure() const { return structure_; }
    std::int64_t value() const { return value_; }
    int digit(int j) const { return digits_[static_cast<std::size_t>(j)]; }
    std::span<const int> digits() const { return digits_; }
    int order() const { return order_; }

private:
    RadixStructure structure_;
    std::int64_t value_;
    std::vector<int> digits_;
    int order_;
};

/// Expands n into its digit representation; errors with OutOfRange when
/// n < 0 or n >= M_N.
MixedRadixIndex index_digits(std::int64_t n, const RadixStructure& structure);

namespace detail {

/// Throws StructureMismatch unless both operands share one structure.
void require_same_structure(const RadixStructure& a, const RadixStructure& b);

}  // namespace detail

}  // namespace vilenkin
