#include "vilenkin/group.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace vilenkin {

RadixStructure::RadixStructure(std::vector<int> radices) : radices_(std::move(radices)) {
    if (radices_.empty()) {
        throw RadixTooSmall("radix sequence must be nonempty");
    }
    cumulative_.reserve(radices_.size() + 1);
    cumulative_.push_back(1);
    for (int m : radices_) {
        if (m < 2) {
            throw RadixTooSmall("every radix must be >= 2, got " + std::to_string(m));
        }
        const std::int64_t prev = cumulative_.back();
        std::int64_t next = 0;
        if (__builtin_mul_overflow(prev, static_cast<std::int64_t>(m), &next)) {
            throw Overflow("cumulative product exceeds 64-bit integer range");
        }
        cumulative_.push_back(next);
        max_radix_ = std::max(max_radix_, m);
    }
}

namespace {

std::int64_t parse_int(std::string_view text, std::string_view what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || text.empty()) {
        throw ParseError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

RadixStructure RadixStructure::parse(std::string_view spec) {
    std::vector<int> radices;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) comma = spec.size();
        std::string_view item = spec.substr(pos, comma - pos);
        if (item.empty()) {
            throw ParseError("empty item in radix spec '" + std::string(spec) + "'");
        }
        std::size_t caret = item.find('^');
        std::int64_t base = 0;
        std::int64_t repeat = 1;
        if (caret == std::string_view::npos) {
            base = parse_int(item, "radix");
        } else {
            base = parse_int(item.substr(0, caret), "radix");
            repeat = parse_int(item.substr(caret + 1), "repeat count");
        }
        if (repeat < 1 || repeat > 64) {
            throw ParseError("repeat count out of range in '" + std::string(item) + "'");
        }
        if (base < 2 || base > std::numeric_limits<int>::max()) {
            throw RadixTooSmall("every radix must be >= 2, got " + std::to_string(base));
        }
        for (std::int64_t i = 0; i < repeat; ++i) {
            radices.push_back(static_cast<int>(base));
        }
        if (comma == spec.size()) break;
        pos = comma + 1;
    }
    return RadixStructure(std::move(radices));
}

RadixStructure RadixStructure::prefix(int level) const {
    if (level < 1 || level > this->level()) {
        throw LevelOutOfRange("prefix level out of range");
    }
    return RadixStructure(std::vector<int>(radices_.begin(), radices_.begin() + level));
}

GroupPoint::GroupPoint(RadixStructure structure, std::vector<int> digits)
    : structure_(std::move(structure)), digits_(std::move(digits)) {
    if (static_cast<int>(digits_.size()) != structure_.level()) {
        throw LengthMismatch("digit count does not match structure level");
    }
    for (int k = 0; k < structure_.level(); ++k) {
        if (digits_[static_cast<std::size_t>(k)] < 0 ||
            digits_[static_cast<std::size_t>(k)] >= structure_.radix(k)) {
            throw OutOfRange("digit " + std::to_string(k) + " outside Z_m");
        }
    }
}

GroupPoint GroupPoint::from_label(const RadixStructure& structure, std::int64_t label) {
    if (label < 0 || label >= structure.size()) {
        throw OutOfRange("grid label out of range");
    }
    const int n = structure.level();
    std::vector<int> digits(static_cast<std::size_t>(n));
    std::int64_t rest = label;
    for (int k = 0; k < n; ++k) {
        const std::int64_t p = structure.place(k);
        digits[static_cast<std::size_t>(k)] = static_cast<int>(rest / p);
        rest %= p;
    }
    return GroupPoint(structure, std::move(digits));
}

GroupPoint GroupPoint::zero(const RadixStructure& structure) {
    return GroupPoint(structure, std::vector<int>(static_cast<std::size_t>(structure.level()), 0));
}

std::int64_t GroupPoint::label() const { return coset_index(structure_.level()); }

std::int64_t GroupPoint::coset_index(int r) const {
    if (r < 0 || r > structure_.level()) {
        throw LevelOutOfRange("coset level out of range");
    }
    // sum_{j<r} x_j * (M_r / M_{j+1})
    const std::int64_t m_r = structure_.cumulative(r);
    std::int64_t index = 0;
    for (int j = 0; j < r; ++j) {
        index += digits_[static_cast<std::size_t>(j)] * (m_r / structure_.cumulative(j + 1));
    }
    return index;
}

GroupPoint add(const GroupPoint& x, const GroupPoint& y) {
    detail::require_same_structure(x.structure(), y.structure());
    const int n = x.structure().level();
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        digits[static_cast<std::size_t>(k)] = (x.digit(k) + y.digit(k)) % x.structure().radix(k);
    }
    return GroupPoint(x.structure(), std::move(digits));
}

GroupPoint neg(const GroupPoint& x) {
    const int n = x.structure().level();
    std::vector<int> digits(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        const int m = x.structure().radix(k);
        digits[static_cast<std::size_t>(k)] = (m - x.digit(k)) % m;
    }
    return GroupPoint(x.structure(), std::move(digits));
}

MixedRadixIndex::MixedRadixIndex(RadixStructure structure, std::int64_t value)
    : structure_(std::move(structure)), value_(value) {
    if (value_ < 0 || value_ >= structure_.size()) {
        throw OutOfRange("index " + std::to_string(value_) + " outside [0, M_N)");
    }
    const int n = structure_.level();
    digits_.assign(static_cast<std::size_t>(n), 0);
    order_ = 0;
    std::int64_t rest = value_;
    for (int j = 0; j < n; ++j) {
        const int d = static_cast<int>(rest % structure_.radix(j));
        digits_[static_cast<std::size_t>(j)] = d;
        rest /= structure_.radix(j);
        if (d != 0) order_ = j;
    }
}

MixedRadixIndex index_digits(std::int64_t n, const RadixStructure& structure) {
    return MixedRadixIndex(structure, n);
}

namespace detail {

void require_same_structure(const RadixStructure& a, const RadixStructure& b) {
    if (a != b) {
        throw StructureMismatch("operands belong to different radix structures");
    }
}

}  // namespace detail

}  // namespace vilenkin
