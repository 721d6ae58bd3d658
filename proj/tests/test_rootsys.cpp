#include <gtest/gtest.h>

#include <loopwords/rootsys.hpp>

using namespace loopwords;

namespace {

struct Expected {
    const char* label;
    int rank;
    std::size_t positive;
    std::vector<int> theta;
};

void PrintTo(const Expected& e, std::ostream* os) { *os << e.label << (e.rank ? std::to_string(e.rank) : ""); }

class RootCounts : public ::testing::TestWithParam<Expected> {};

TEST_P(RootCounts, SizeAndHighestRoot) {
    const auto& e = GetParam();
    auto sys = RootSystem::build(e.label, e.rank);
    EXPECT_EQ(sys.size(), e.positive);
    EXPECT_EQ(sys.theta().coeffs, e.theta);
    for (std::size_t id = 0; id < sys.size(); ++id) EXPECT_LE(sys.root(id).height(), sys.theta().height());
}

INSTANTIATE_TEST_SUITE_P(
    AllTypes, RootCounts,
    ::testing::Values(Expected{"A", 1, 1, {1}}, Expected{"A", 4, 10, {1, 1, 1, 1}}, Expected{"B", 2, 4, {1, 2}},
                      Expected{"B", 3, 9, {1, 2, 2}}, Expected{"C", 3, 9, {2, 2, 1}},
                      Expected{"C", 4, 16, {2, 2, 2, 1}}, Expected{"D", 4, 12, {1, 2, 1, 1}},
                      Expected{"D", 5, 20, {1, 2, 2, 1, 1}}, Expected{"G2", 0, 6, {2, 3}},
                      Expected{"F4", 0, 24, {2, 4, 3, 2}}, Expected{"E6", 0, 36, {1, 2, 3, 2, 1, 2}},
                      Expected{"E7", 0, 63, {1, 2, 3, 4, 3, 2, 2}}, Expected{"E8", 0, 120, {2, 3, 4, 5, 6, 4, 2, 3}}),
    [](const ::testing::TestParamInfo<Expected>& info) {
        return std::string(info.param.label) + (info.param.rank ? std::to_string(info.param.rank) : "");
    });

TEST(RootSystem, SymmetrizedCartanIsSymmetric) {
    for (auto label : {"B3", "C3", "G2", "F4", "E6"}) {
        auto sys = RootSystem::build(label);
        const auto& b = sys.sym_cartan();
        for (int i = 0; i < sys.rank(); ++i)
            for (int j = 0; j < sys.rank(); ++j) EXPECT_EQ(b[i][j], b[j][i]) << label;
    }
}

TEST(RootSystem, ShortAndLongNodes) {
    auto b2 = RootSystem::build("B", 2);
    EXPECT_LT(b2.pairing(b2.simple_root(2), b2.simple_root(2)), b2.pairing(b2.simple_root(1), b2.simple_root(1)));
    auto c3 = RootSystem::build("C", 3);
    EXPECT_GT(c3.pairing(c3.simple_root(3), c3.simple_root(3)), c3.pairing(c3.simple_root(1), c3.simple_root(1)));
    auto g2 = RootSystem::build("G2");
    EXPECT_EQ(g2.pairing(g2.simple_root(1), g2.simple_root(1)), 3 * g2.pairing(g2.simple_root(2), g2.simple_root(2)));
}

TEST(RootSystem, CorootPairingUsesCartanRows) {
    auto g2 = RootSystem::build("G2");
    // <alpha_1, alpha_2 vee> = -3 for alpha_1 long.
    EXPECT_EQ(g2.coroot_pairing(g2.simple_root(1).coeffs, 2), -3);
    EXPECT_EQ(g2.coroot_pairing(g2.simple_root(2).coeffs, 1), -1);
    EXPECT_EQ(g2.theta_coroot_pairing(g2.theta().coeffs), 2);
}

TEST(RootSystem, SplittingsAreRootPairs) {
    auto sys = RootSystem::build("C", 3);
    for (std::size_t id = 0; id < sys.size(); ++id)
        for (auto [a, b] : sys.splittings(id)) {
            EXPECT_EQ(sys.root(a) + sys.root(b), sys.root(id));
            EXPECT_EQ(sys.sum_id(a, b), id);
        }
    EXPECT_TRUE(sys.splittings(sys.simple_id(1)).empty());
}

TEST(RootSystem, LookupAndErrors) {
    auto a2 = RootSystem::build("A2");
    EXPECT_TRUE(a2.is_root(Root{{1, 1}}));
    EXPECT_FALSE(a2.is_root(Root{{2, 1}}));
    EXPECT_EQ(a2.add(a2.simple_root(1), a2.simple_root(2)), a2.theta());
    EXPECT_FALSE(a2.add(a2.simple_root(1), a2.simple_root(1)).has_value());
    EXPECT_THROW(RootSystem::build("A"), ConfigError);
    EXPECT_THROW(RootSystem::build("D", 2), ConfigError);
    EXPECT_THROW(RootSystem::build("E", 5), ConfigError);
    EXPECT_THROW(RootSystem::build("G2", 3), ConfigError);
    EXPECT_THROW(RootSystem::build("X", 2), ConfigError);
    EXPECT_EQ(RootSystem::build("E", 6).type_label(), "E6");
    EXPECT_EQ(RootSystem::build("a", 3).type_label(), "A3");
}

} // namespace
