#include "vilenkin/transform.hpp"

#include <cmath>
#include <numbers>

namespace vilenkin {

namespace {

void check_array(const RadixStructure& s, const std::vector<Complex>& a, const char* what) {
    if (static_cast<std::int64_t>(a.size()) != s.size()) {
        throw LengthMismatch(std::string(what) + " length does not equal M_N");
    }
    for (const Complex& z : a) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw OutOfRange(std::string(what) + " contains a non-finite value");
        }
    }
}

/// One size-m DFT pass over every digit position. `sign` is -1 for
/// analysis, +1 for synthesis. Twiddles come from a per-radix table whose
/// entries are each evaluated from the exact rational angle.
void dft_stages(const RadixStructure& s, std::vector<Complex>& buf, int sign) {
    const int n_levels = s.level();
    const std::int64_t total = s.size();
    std::vector<Complex> table;
    std::vector<Complex> scratch(static_cast<std::size_t>(s.max_radix()));
    for (int k = 0; k < n_levels; ++k) {
        const int m = s.radix(k);
        const std::int64_t stride = s.place(k);
        table.resize(static_cast<std::size_t>(m));
        for (int q = 0; q < m; ++q) {
            table[static_cast<std::size_t>(q)] =
                std::polar(1.0, sign * 2.0 * std::numbers::pi * q / m);
        }
        const std::int64_t block = stride * m;
        for (std::int64_t base0 = 0; base0 < total; base0 += block) {
            for (std::int64_t offset = 0; offset < stride; ++offset) {
                Complex* slot = buf.data() + base0 + offset;
                for (int t = 0; t < m; ++t) {
                    scratch[static_cast<std::size_t>(t)] = slot[t * stride];
                }
                for (int out = 0; out < m; ++out) {
                    Complex acc = scratch[0];
                    for (int t = 1; t < m; ++t) {
                        acc += scratch[static_cast<std::size_t>(t)] *
                               table[static_cast<std::size_t>((out * t) % m)];
                    }
                    slot[out * stride] = acc;
                }
            }
        }
    }
}

/// Walks canonical indices n = 0..M_N-1 while tracking the grid-layout
/// position J(n) = sum_k n_k * place(k); visit(n, J) is called for each.
template <typename Visit>
void for_each_digit_reversal(const RadixStructure& s, Visit&& visit) {
    const int n_levels = s.level();
    const std::int64_t total = s.size();
    std::vector<int> digits(static_cast<std::size_t>(n_levels), 0);
    std::int64_t grid_pos = 0;
    for (std::int64_t n = 0;; ++n) {
        visit(n, grid_pos);
        if (n + 1 == total) break;
        for (int k = 0;; ++k) {
            const std::int64_t p = s.place(k);
            if (++digits[static_cast<std::size_t>(k)] < s.radix(k)) {
                grid_pos += p;
                break;
            }
            digits[static_cast<std::size_t>(k)] = 0;
            grid_pos -= (s.radix(k) - 1) * p;
        }
    }
}

}  // namespace

void StepFunction::validate() const { check_array(structure, values, "StepFunction values"); }

void Spectrum::validate() const { check_array(structure, coeffs, "Spectrum coeffs"); }

Complex rademacher(int k, const GroupPoint& x) {
    if (k < 0 || k >= x.structure().level()) {
        throw LevelOutOfRange("rademacher digit position out of range");
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * x.digit(k) / x.structure().radix(k));
}

Complex vilenkin_char(const MixedRadixIndex& n, const GroupPoint& x) {
    detail::require_same_structure(n.structure(), x.structure());
    return detail::char_from_digits(x.structure(), n.digits(), x.digits());
}

namespace detail {

Complex char_from_digits(const RadixStructure& s, std::span<const int> n_digits,
                         std::span<const int> x_digits) {
    double turns = 0.0;
    for (int k = 0; k < s.level(); ++k) {
        const int m = s.radix(k);
        const int q = static_cast<int>(
            (static_cast<std::int64_t>(n_digits[static_cast<std::size_t>(k)]) *
             x_digits[static_cast<std::size_t>(k)]) %
            m);
        turns += static_cast<double>(q) / m;
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * turns);
}

std::vector<int> all_point_digits(const RadixStructure& s) {
    const int n_levels = s.level();
    const std::int64_t total = s.size();
    std::vector<int> flat(static_cast<std::size_t>(total * n_levels), 0);
    for (std::int64_t j = 1; j < total; ++j) {
        int* row = flat.data() + j * n_levels;
        const int* prev = flat.data() + (j - 1) * n_levels;
        std::copy(prev, prev + n_levels, row);
        for (int k = n_levels - 1; k >= 0; --k) {
            if (++row[k] < s.radix(k)) break;
            row[k] = 0;
        }
    }
    return flat;
}

std::vector<int> all_index_digits(const RadixStructure& s) {
    const int n_levels = s.level();
    const std::int64_t total = s.size();
    std::vector<int> flat(static_cast<std::size_t>(total * n_levels), 0);
    for (std::int64_t n = 1; n < total; ++n) {
        int* row = flat.data() + n * n_levels;
        const int* prev = flat.data() + (n - 1) * n_levels;
        std::copy(prev, prev + n_levels, row);
        for (int k = 0; k < n_levels; ++k) {
            if (++row[k] < s.radix(k)) break;
            row[k] = 0;
        }
    }
    return flat;
}

}  // namespace detail

Spectrum forward(const StepFunction& f) {
    f.validate();
    std::vector<Complex> buf = f.values;
    dft_stages(f.structure, buf, -1);
    const double scale = 1.0 / static_cast<double>(f.structure.size());
    std::vector<Complex> coeffs(buf.size());
    for_each_digit_reversal(f.structure, [&](std::int64_t n, std::int64_t grid_pos) {
        coeffs[static_cast<std::size_t>(n)] = buf[static_cast<std::size_t>(grid_pos)] * scale;
    });
    return Spectrum{f.structure, std::move(coeffs)};
}

StepFunction inverse(const Spectrum& s) {
    s.validate();
    std::vector<Complex> buf(s.coeffs.size());
    for_each_digit_reversal(s.structure, [&](std::int64_t n, std::int64_t grid_pos) {
        buf[static_cast<std::size_t>(grid_pos)] = s.coeffs[static_cast<std::size_t>(n)];
    });
    dft_stages(s.structure, buf, +1);
    return StepFunction{s.structure, std::move(buf)};
}

Spectrum forward_naive(const StepFunction& f, std::int64_t cap) {
    f.validate();
    const RadixStructure& s = f.structure;
    const std::int64_t total = s.size();
    if (total > cap) {
        throw OracleCapExceeded("M_N = " + std::to_string(total) + " exceeds oracle cap " +
                                std::to_string(cap));
    }
    const int n_levels = s.level();
    const std::vector<int> point_digits = detail::all_point_digits(s);
    const std::vector<int> index_digits = detail::all_index_digits(s);
    const double scale = 1.0 / static_cast<double>(total);
    std::vector<Complex> coeffs(static_cast<std::size_t>(total));
    for (std::int64_t n = 0; n < total; ++n) {
        std::span<const int> nd(index_digits.data() + n * n_levels,
                                static_cast<std::size_t>(n_levels));
        Complex acc = 0.0;
        for (std::int64_t j = 0; j < total; ++j) {
            std::span<const int> xd(point_digits.data() + j * n_levels,
                                    static_cast<std::size_t>(n_levels));
            acc += f.values[static_cast<std::size_t>(j)] *
                   std::conj(detail::char_from_digits(s, nd, xd));
        }
        coeffs[static_cast<std::size_t>(n)] = acc * scale;
    }
    return Spectrum{s, std::move(coeffs)};
}

std::vector<Complex> synthesize_on_prefix(const RadixStructure& s, int level,
                                          std::span<const Complex> coeffs) {
    if (level < 1 || level > s.level()) {
        throw LevelOutOfRange("synthesis level out of range");
    }
    const RadixStructure sub = s.prefix(level);
    if (static_cast<std::int64_t>(coeffs.size()) > sub.size()) {
        throw OutOfRange("spectral support exceeds M_level");
    }
    std::vector<Complex> padded(static_cast<std::size_t>(sub.size()), Complex{0.0, 0.0});
    std::copy(coeffs.begin(), coeffs.end(), padded.begin());
    Spectrum spec{sub, std::move(padded)};
    return inverse(spec).values;
}

}  // namespace vilenkin
