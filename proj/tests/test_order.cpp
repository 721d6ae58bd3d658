#include <gtest/gtest.h>

#include <loopwords/order.hpp>

using namespace loopwords;

namespace {

TEST(OrderPolicy, WeightedComparison) {
    auto p = OrderPolicy::weighted({1, 2}, {2, 3});
    // 1^(2) has relative exponent 1, 2^(2) has 2/3: larger relative exponent is smaller.
    EXPECT_TRUE(p.less({1, 2}, {2, 2}));
    // Equal relative exponents fall back to the node order.
    EXPECT_TRUE(p.less({1, 2}, {2, 3}));
    EXPECT_FALSE(p.less({2, 3}, {1, 2}));
    EXPECT_TRUE(p.less({1, 0}, {2, 0}));
    EXPECT_TRUE(p.less({2, 1}, {1, 0}));
    EXPECT_EQ(p.compare({1, 4}, {1, 4}), std::strong_ordering::equal);
}

TEST(OrderPolicy, NodeOrderIsIncreasingList) {
    auto p = OrderPolicy::weighted({5, 1, 3, 2, 4}, {1, 1, 1, 1, 1});
    EXPECT_TRUE(p.node_less(5, 1));
    EXPECT_TRUE(p.node_less(3, 2));
    EXPECT_FALSE(p.node_less(4, 2));
    EXPECT_EQ(p.position(5), 0);
    EXPECT_TRUE(p.less({5, 0}, {4, 0}));
}

TEST(OrderPolicy, ExactForLargeExponents) {
    auto p = OrderPolicy::weighted({1, 2}, {999999937, 999999929});
    const Exponent c1 = 999999937LL, c2 = 999999929LL;
    EXPECT_EQ(p.compare_relative(1, 3 * c1 + 1, 2, 3 * c2), std::strong_ordering::greater);
    EXPECT_EQ(p.compare_relative(1, 3 * c1 - 1, 2, 3 * c2), std::strong_ordering::less);
    EXPECT_EQ(p.compare_relative(1, 999999937LL * 5, 2, 999999929LL * 5), std::strong_ordering::equal);
}

TEST(OrderPolicy, GeneralizedPiecewiseSlopes) {
    auto p = OrderPolicy::generalized({1, 2}, {Rational(1), Rational(3, 2)}, {Rational(2), Rational(1, 2)});
    EXPECT_EQ(p.relative(2, 2), Rational(3));
    EXPECT_EQ(p.relative(2, -2), Rational(-1));
    EXPECT_EQ(p.relative(1, -2), Rational(-4));
    // f_1(3) = 3 = f_2(2): tie broken by node order.
    EXPECT_TRUE(p.less({1, 3}, {2, 2}));
    EXPECT_THROW(p.weights(), UnsupportedOperation);
}

TEST(OrderPolicy, Markers) {
    auto w = OrderPolicy::weighted({1, 2}, {2, 3});
    auto m = w.marker(2, -1);
    EXPECT_EQ(m.preimage, (std::vector<Exponent>{-4, -6}));
    EXPECT_EQ(OrderPolicy::marker_height(m, Root{{1, 1}}), -10);

    auto g = OrderPolicy::generalized({1, 2}, {Rational(1), Rational(3, 2)}, {Rational(2), Rational(1, 2)});
    auto plus = g.marker(1, +1);
    // Smallest N > 0 with N / 1 and N / (3/2) integral is 3.
    EXPECT_EQ(plus.value, Rational(3));
    EXPECT_EQ(plus.preimage, (std::vector<Exponent>{3, 2}));
    auto minus = g.marker(1, -1);
    EXPECT_EQ(minus.value, Rational(-2));
    EXPECT_EQ(minus.preimage, (std::vector<Exponent>{-1, -4}));
    for (int k = 0; k < 2; ++k) {
        EXPECT_EQ(g.relative(k + 1, plus.preimage[static_cast<std::size_t>(k)]), plus.value);
        EXPECT_EQ(g.relative(k + 1, minus.preimage[static_cast<std::size_t>(k)]), minus.value);
    }
    auto win = g.alphabet_window(1);
    EXPECT_EQ(win[0], (std::pair<Exponent, Exponent>{-1, 3}));
    EXPECT_EQ(win[1], (std::pair<Exponent, Exponent>{-4, 2}));
}

TEST(OrderPolicy, RejectsBadConfig) {
    EXPECT_THROW(OrderPolicy::weighted({1, 1}, {1, 1}), ConfigError);
    EXPECT_THROW(OrderPolicy::weighted({1, 3}, {1, 1}), ConfigError);
    EXPECT_THROW(OrderPolicy::weighted({1, 2}, {1}), ConfigError);
    EXPECT_THROW(OrderPolicy::weighted({1, 2}, {0, 1}), ConfigError);
    EXPECT_THROW(OrderPolicy::generalized({1, 2}, {Rational(1), Rational(0)}, {Rational(1), Rational(1)}), ConfigError);
    EXPECT_THROW(OrderPolicy::weighted({}, {}), ConfigError);
}

TEST(OrderPolicy, FingerprintDistinguishesPolicies) {
    auto a = OrderPolicy::weighted({1, 2}, {1, 2});
    auto b = OrderPolicy::weighted({2, 1}, {1, 2});
    auto c = OrderPolicy::weighted({1, 2}, {2, 1});
    EXPECT_NE(a.fingerprint(), b.fingerprint());
    EXPECT_NE(a.fingerprint(), c.fingerprint());
    EXPECT_EQ(a.fingerprint(), OrderPolicy::weighted({1, 2}, {1, 2}).fingerprint());
}

} // namespace
