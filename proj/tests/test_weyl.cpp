#include <gtest/gtest.h>

#include <algorithm>

#include <loopwords/weyl.hpp>

using namespace loopwords;

namespace {

AffineRealRoot ar(std::vector<int> c, Exponent d) { return {Root{std::move(c)}, d}; }

TEST(Weyl, Reflections) {
    auto a2 = RootSystem::build("A2");
    EXPECT_EQ(affine_reflect(a2, 1, ar({1, 0}, 0)), ar({-1, 0}, 0));
    EXPECT_EQ(affine_reflect(a2, 1, ar({0, 1}, 3)), ar({1, 1}, 3));
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(affine_reflect(a1, 0, ar({1}, 0)), ar({-1}, 2));
    auto b2 = RootSystem::build("B2");
    // alpha_2 short: (alpha_1 + alpha_2, alpha_1 vee) = 1, (alpha_1 + alpha_2, alpha_2 vee) = 0.
    EXPECT_EQ(affine_reflect(b2, 1, ar({1, 1}, 0)), ar({0, 1}, 0));
    EXPECT_EQ(affine_reflect(b2, 2, ar({1, 1}, 4)), ar({1, 1}, 4));
    auto g2 = RootSystem::build("G2");
    for (int j = 0; j <= 2; ++j)
        for (const auto& r : g2.positive_roots())
            for (Exponent d : {0, 1, 5}) {
                const AffineRealRoot x{r, d};
                EXPECT_EQ(affine_reflect(g2, j, affine_reflect(g2, j, x)), x);
                EXPECT_EQ(affine_reflect(g2, j, simple_affine_root(g2, j)), AffineRealRoot({-simple_affine_root(g2, j).finite, -simple_affine_root(g2, j).level}));
            }
    EXPECT_THROW(affine_reflect(a2, 3, ar({1, 0}, 0)), PreconditionError);
}

TEST(Weyl, TranslationTerminalSets) {
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(translation_terminal_set(a1, {2}), (std::vector<AffineRealRoot>{ar({1}, 0), ar({1}, 1)}));
    auto a2 = RootSystem::build("A2");
    auto e = translation_terminal_set(a2, {1, 1});
    std::sort(e.begin(), e.end());
    std::vector<AffineRealRoot> expected{ar({1, 0}, 0), ar({0, 1}, 0), ar({1, 1}, 0), ar({1, 1}, 1)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(e, expected);
    EXPECT_EQ(translation_inversions(a2, {1, 1}, 4), e);
    auto a3 = RootSystem::build("A3");
    auto e3 = translation_terminal_set(a3, {1, 2, 1});
    // (alpha, mu) over the six positive roots: 1,2,1,3,3,4.
    EXPECT_EQ(e3.size(), 14u);
    EXPECT_THROW(translation_terminal_set(a2, {1, 0}), PreconditionError);
}

TEST(Weyl, PConstants) {
    auto p = OrderPolicy::weighted({1, 2}, {2, 3});
    EXPECT_EQ(p_constants(p, 1, 4), (Coweight{4, 6}));
    EXPECT_EQ(p_constants(p, 2, 3), (Coweight{3, 3}));
    auto q = OrderPolicy::weighted({1, 2}, {1, 1});
    EXPECT_EQ(p_constants(q, 2, 1), (Coweight{2, 1}));
    EXPECT_EQ(p_of_alpha(p_constants(q, 2, 1), Root{{1, 1}}), 3);
    EXPECT_THROW(p_constants(q, 1, -1), PreconditionError);
    for (int i = 1; i <= 2; ++i)
        for (Exponent d = 0; d < 12; ++d)
            for (int j = 1; j <= 2; ++j)
                EXPECT_EQ(p_constants(p, i, d)[j - 1], p_constant_by_rule(p, i, d, j));
}

TEST(Weyl, TerminalSegment) {
    auto a2 = RootSystem::build("A2");
    LeclercEngine e(a2, OrderPolicy::weighted({1, 2}, {1, 1}));
    auto seg = terminal_segment(e, 2, 1);
    auto got = seg.word_level;
    std::sort(got.begin(), got.end());
    std::vector<AffineRealRoot> expected{ar({1, 0}, 0), ar({1, 0}, 1), ar({0, 1}, 0),
                                         ar({1, 1}, 0), ar({1, 1}, 1), ar({1, 1}, 2)};
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(got, expected);
    auto word = extract_and_verify(a2, seg.word_level);
    EXPECT_EQ(word.size(), 6u);
}

TEST(Weyl, ExtractReducedWord) {
    auto a1 = RootSystem::build("A1");
    EXPECT_EQ(extract_reduced_word(a1, {ar({1}, 0)}), std::vector<int>{1});
    EXPECT_EQ(extract_reduced_word(a1, {ar({1}, 0), ar({1}, 1)}), (std::vector<int>{1, 0}));
    EXPECT_THROW(extract_reduced_word(a1, {ar({1}, 1)}), NotReducedOrder);
    auto a2 = RootSystem::build("A2");
    EXPECT_THROW(extract_reduced_word(a2, {ar({1, 1}, 0)}), NotReducedOrder);

    LeclercEngine e(a2, OrderPolicy::weighted({1, 2}, {1, 1}));
    auto block = translation_terminal_set(a2, {1, 1});
    LoopRootOrder(e).sort(block);
    auto word = extract_and_verify(a2, block);
    EXPECT_EQ(reconstruct_roots(a2, word), block);
}

TEST(Weyl, BetaSequenceWeighted) {
    auto a1 = RootSystem::build("A1");
    LeclercEngine e1(a1, OrderPolicy::weighted({1}, {1}));
    auto b = beta_sequence(e1, -1, 1);
    ASSERT_EQ(b.size(), 3u);
    EXPECT_EQ(b[0].k, 1);
    EXPECT_EQ(b[0].root, ar({1}, -1));
    EXPECT_EQ(b[1].root, ar({1}, 0));
    EXPECT_EQ(b[2].root, ar({1}, 1));

    auto b2 = RootSystem::build("B2");
    LeclercEngine e(b2, OrderPolicy::weighted({2, 1}, {3, 2}));
    auto seq = beta_sequence(e, -150, 50);
    LoopRootOrder order(e);
    for (std::size_t k = 1; k < seq.size(); ++k) EXPECT_TRUE(order.less(seq[k - 1].root, seq[k].root));
    const std::size_t l = translation_terminal_set(b2, {3, 2}).size();
    for (std::size_t k = l; k < seq.size(); ++k) {
        EXPECT_EQ(seq[k].root.finite, seq[k - l].root.finite);
        EXPECT_EQ(seq[k].root.level, seq[k - l].root.level + e.policy().weighted_height(seq[k].root.finite));
    }
}

TEST(Weyl, BetaSequenceGeneralized) {
    auto a2 = RootSystem::build("A2");
    LeclercEngine e(a2, OrderPolicy::generalized({1, 2}, {Rational(1), Rational(3, 2)}, {Rational(2), Rational(1, 2)}));
    auto seq = beta_sequence(e, -20, 20);
    LoopRootOrder order(e);
    std::vector<AffineRealRoot> upper;
    for (std::size_t k = 0; k < seq.size(); ++k) {
        if (k) {
            EXPECT_TRUE(order.less(seq[k - 1].root, seq[k].root));
        }
        EXPECT_EQ(seq[k].root.level < 0, seq[k].k > 0);
        if (seq[k].k <= 0) upper.push_back(seq[k].root);
    }
    EXPECT_EQ(extract_and_verify(a2, upper).size(), upper.size());
}

} // namespace
