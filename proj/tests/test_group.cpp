#include <doctest.h>

#include "vilenkin/group.hpp"
#include "vilenkin/rng.hpp"

using namespace vilenkin;

TEST_CASE("cumulative products follow the generalized number system") {
    const RadixStructure s({2, 2, 2});
    CHECK(s.cumulative(0) == 1);
    CHECK(s.cumulative(1) == 2);
    CHECK(s.cumulative(2) == 4);
    CHECK(s.cumulative(3) == 8);

    const RadixStructure t({2, 3});
    CHECK(t.cumulative(0) == 1);
    CHECK(t.cumulative(1) == 2);
    CHECK(t.cumulative(2) == 6);
    CHECK(t.max_radix() == 3);
}

TEST_CASE("radices below 2 are rejected") {
    CHECK_THROWS_AS(RadixStructure({2, 1}), RadixTooSmall);
    CHECK_THROWS_AS(RadixStructure({}), RadixTooSmall);
}

TEST_CASE("cumulative overflow is an explicit error") {
    // 2^63 overflows int64.
    CHECK_THROWS_AS(RadixStructure::parse("2^63"), Overflow);
    CHECK_NOTHROW(RadixStructure::parse("2^62"));
}

TEST_CASE("radix spec strings accept comma lists and power form") {
    CHECK(RadixStructure::parse("2,3,2,3") == RadixStructure({2, 3, 2, 3}));
    CHECK(RadixStructure::parse("2^10") == RadixStructure(std::vector<int>(10, 2)));
    CHECK(RadixStructure::parse("2,3^4") == RadixStructure({2, 3, 3, 3, 3}));
    CHECK_THROWS_AS(RadixStructure::parse("2,,3"), ParseError);
    CHECK_THROWS_AS(RadixStructure::parse("2,x"), ParseError);
    CHECK_THROWS_AS(RadixStructure::parse("2^0"), ParseError);
    CHECK_THROWS_AS(RadixStructure::parse("2,1,2"), RadixTooSmall);
}

TEST_CASE("digitwise addition and negation") {
    const RadixStructure s({2, 3});
    const GroupPoint x(s, {1, 2});
    const GroupPoint y(s, {1, 2});
    const GroupPoint sum = add(x, y);
    CHECK(sum.digit(0) == 0);
    CHECK(sum.digit(1) == 1);

    const GroupPoint minus = neg(x);
    CHECK(minus.digit(0) == 1);
    CHECK(minus.digit(1) == 1);
    CHECK(add(x, minus).label() == 0);
    CHECK(neg(GroupPoint::zero(s)).label() == 0);
}

TEST_CASE("points of different structures do not mix") {
    const GroupPoint x(RadixStructure({2, 3}), {1, 2});
    const GroupPoint y(RadixStructure({3, 2}), {1, 1});
    CHECK_THROWS_AS(add(x, y), StructureMismatch);
}

TEST_CASE("abelian group axioms hold exhaustively on a small grid") {
    const RadixStructure s({2, 3, 4});  // 24 points
    const std::int64_t total = s.size();
    std::vector<GroupPoint> pts;
    for (std::int64_t j = 0; j < total; ++j) {
        pts.push_back(GroupPoint::from_label(s, j));
    }
    for (std::int64_t a = 0; a < total; ++a) {
        CHECK(add(pts[a], pts[0]).label() == a);                  // identity
        CHECK(add(pts[a], neg(pts[a])).label() == 0);             // inverse
        CHECK(neg(neg(pts[a])).label() == a);                     // involution
        for (std::int64_t b = 0; b < total; ++b) {
            CHECK(add(pts[a], pts[b]).label() == add(pts[b], pts[a]).label());
        }
    }
    // Associativity over all triples.
    for (std::int64_t a = 0; a < total; ++a) {
        for (std::int64_t b = 0; b < total; ++b) {
            const GroupPoint ab = add(pts[a], pts[b]);
            for (std::int64_t c = 0; c < total; ++c) {
                CHECK(add(ab, pts[c]).label() == add(pts[a], add(pts[b], pts[c])).label());
            }
        }
    }
}

TEST_CASE("group axioms hold on random samples of a larger grid") {
    const RadixStructure s = RadixStructure::parse("2,3,4,5,2,3");
    Rng rng(7);
    const auto draw = [&](Rng& r) {
        return GroupPoint::from_label(s, static_cast<std::int64_t>(
                                             r.below(static_cast<std::uint64_t>(s.size()))));
    };
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = draw(rng);
        const auto b = draw(rng);
        const auto c = draw(rng);
        CHECK(add(a, b).label() == add(b, a).label());
        CHECK(add(add(a, b), c).label() == add(a, add(b, c)).label());
        CHECK(add(a, neg(a)).label() == 0);
    }
}

TEST_CASE("index digit expansion matches the number system") {
    const RadixStructure s({2, 3, 2});
    const MixedRadixIndex n = index_digits(5, s);
    CHECK(n.digit(0) == 1);
    CHECK(n.digit(1) == 2);
    CHECK(n.digit(2) == 0);
    CHECK(n.order() == 1);

    // n = M_k gives the unit digit pattern at position k.
    for (int k = 0; k < s.level(); ++k) {
        const MixedRadixIndex e = index_digits(s.cumulative(k), s);
        CHECK(e.order() == k);
        for (int j = 0; j < s.level(); ++j) {
            CHECK(e.digit(j) == (j == k ? 1 : 0));
        }
        CHECK(s.cumulative(e.order()) <= e.value());
        CHECK(e.value() < s.cumulative(e.order() + 1));
    }

    const MixedRadixIndex zero = index_digits(0, s);
    CHECK(zero.order() == 0);
    CHECK(zero.digit(0) == 0);

    CHECK_THROWS_AS(index_digits(12, s), OutOfRange);
    CHECK_THROWS_AS(index_digits(-1, s), OutOfRange);
}

TEST_CASE("digit expansion round-trips every value") {
    const RadixStructure s({3, 2, 3, 2});
    for (std::int64_t n = 0; n < s.size(); ++n) {
        const MixedRadixIndex idx = index_digits(n, s);
        std::int64_t reconstructed = 0;
        for (int j = 0; j < s.level(); ++j) {
            reconstructed += idx.digit(j) * s.cumulative(j);
        }
        CHECK(reconstructed == n);
        if (n >= 1) {
            CHECK(s.cumulative(idx.order()) <= n);
            CHECK(n < s.cumulative(idx.order() + 1));
        }
    }
}

TEST_CASE("coset labels group points by digit prefix") {
    const RadixStructure s({2, 3});
    const GroupPoint x(s, {1, 2});
    CHECK(x.coset_index(0) == 0);
    CHECK(x.coset_index(1) == 1);
    CHECK(x.coset_index(2) == x.label());
    CHECK_THROWS_AS(x.coset_index(3), LevelOutOfRange);

    // Each level-r coset holds exactly M_N/M_r grid points.
    const RadixStructure t({2, 3, 2});
    for (int r = 0; r <= t.level(); ++r) {
        std::vector<int> counts(static_cast<std::size_t>(t.cumulative(r)), 0);
        for (std::int64_t j = 0; j < t.size(); ++j) {
            const GroupPoint p = GroupPoint::from_label(t, j);
            ++counts[static_cast<std::size_t>(p.coset_index(r))];
        }
        for (int c : counts) {
            CHECK(c == t.size() / t.cumulative(r));
        }
    }
}

TEST_CASE("labels agree between from_label and coset_index at full level") {
    const RadixStructure s = RadixStructure::parse("2,3,4");
    for (std::int64_t j = 0; j < s.size(); ++j) {
        CHECK(GroupPoint::from_label(s, j).label() == j);
    }
}
