#include <gtest/gtest.h>

#include <array>
#include <cstdint>
#include <vector>

#include "kgraph/degree.hpp"
#include "kgraph/error.hpp"

using kgraph::Degree;

TEST(Degree, LeqExamples) {
    EXPECT_TRUE(kgraph::leq({5, 6}, {10, 6}));
    EXPECT_FALSE(kgraph::leq({10, 2}, {5, 6}));
    EXPECT_FALSE(kgraph::leq({5, 6}, {10, 2}));
    EXPECT_TRUE(kgraph::leq({0, 0}, {0, 0}));
}

TEST(Degree, JoinExamples) {
    EXPECT_EQ(kgraph::join({10, 2}, {5, 6}), (Degree{10, 6}));
    EXPECT_EQ(kgraph::join({0, 0}, {7, 3}), (Degree{7, 3}));
    EXPECT_EQ(kgraph::join({3}, {3}), (Degree{3}));
}

TEST(Degree, MeetAddSubtract) {
    EXPECT_EQ(kgraph::meet({10, 2}, {5, 6}), (Degree{5, 2}));
    EXPECT_EQ(kgraph::add({1, 0}, {0, 1}), (Degree{1, 1}));
    EXPECT_EQ(kgraph::subtract({10, 6}, {5, 6}), (Degree{5, 0}));
}

TEST(Degree, ErrorPaths) {
    EXPECT_THROW(kgraph::leq({1, 2}, {1, 2, 3}), kgraph::InputError);
    EXPECT_THROW(kgraph::join({1}, {1, 2}), kgraph::InputError);
    EXPECT_THROW(kgraph::subtract({1, 1}, {2, 0}), kgraph::DomainError);
    EXPECT_THROW(kgraph::add({Degree::kLimit - 1, 0}, {1, 0}), kgraph::DomainError);
    EXPECT_THROW(Degree(std::vector<std::uint32_t>{}), kgraph::InputError);
    EXPECT_THROW(Degree::unit(2, 3), kgraph::InputError);
    std::array<std::int64_t, 2> zero{0, 0};
    EXPECT_THROW(kgraph::positive_part(zero), kgraph::DomainError);
}

TEST(Degree, PositivePartExamples) {
    std::array<std::int64_t, 2> a{5, -4}, b{-1, -1}, c{2, 0};
    EXPECT_EQ(kgraph::positive_part(a), (std::pair<Degree, Degree>{{0, 4}, {5, 0}}));
    EXPECT_EQ(kgraph::positive_part(b), (std::pair<Degree, Degree>{{1, 1}, {0, 0}}));
    EXPECT_EQ(kgraph::positive_part(c), (std::pair<Degree, Degree>{{0, 0}, {2, 0}}));
}

TEST(Degree, PositivePartSplitsExactly) {
    for (std::int64_t x = -3; x <= 3; ++x) {
        for (std::int64_t y = -3; y <= 3; ++y) {
            if (x == 0 && y == 0) continue;
            std::array<std::int64_t, 2> p{x, y};
            auto [neg, pos] = kgraph::positive_part(p);
            EXPECT_TRUE(kgraph::meet(neg, pos).is_zero());
            for (std::size_t i = 0; i < 2; ++i) {
                EXPECT_EQ(static_cast<std::int64_t>(pos[i]) - static_cast<std::int64_t>(neg[i]), p[i]);
            }
        }
    }
}

// Lattice laws, exhaustively on entries <= 4 for k = 1, 2 and entries <= 2 for k = 3.
class DegreeLattice : public ::testing::TestWithParam<std::pair<std::size_t, std::uint32_t>> {};

TEST_P(DegreeLattice, Laws) {
    auto [k, top] = GetParam();
    auto all = kgraph::degrees_below(Degree::uniform(k, top));
    for (const auto& a : all) {
        for (const auto& b : all) {
            EXPECT_EQ(kgraph::join(a, b), kgraph::join(b, a));
            EXPECT_EQ(kgraph::meet(a, b), kgraph::meet(b, a));
            EXPECT_EQ(kgraph::join(a, kgraph::meet(a, b)), a);
            EXPECT_EQ(kgraph::meet(a, kgraph::join(a, b)), a);
            EXPECT_EQ(kgraph::subtract(kgraph::add(a, b), b), a);
            EXPECT_EQ(kgraph::leq(a, b), kgraph::join(a, b) == b);
            if (k == 3) continue;  // associativity is the cubic loop; keep it to k <= 2
            for (const auto& c : all) {
                EXPECT_EQ(kgraph::join(kgraph::join(a, b), c), kgraph::join(a, kgraph::join(b, c)));
                EXPECT_EQ(kgraph::meet(kgraph::meet(a, b), c), kgraph::meet(a, kgraph::meet(b, c)));
            }
        }
    }
}

INSTANTIATE_TEST_SUITE_P(SmallRanks, DegreeLattice,
                         ::testing::Values(std::pair<std::size_t, std::uint32_t>{1, 4},
                                           std::pair<std::size_t, std::uint32_t>{2, 4},
                                           std::pair<std::size_t, std::uint32_t>{3, 2}));

TEST(Degree, AssociativityRankThree) {
    auto all = kgraph::degrees_below(Degree::uniform(3, 1));
    for (const auto& a : all)
        for (const auto& b : all)
            for (const auto& c : all) {
                EXPECT_EQ(kgraph::join(kgraph::join(a, b), c), kgraph::join(a, kgraph::join(b, c)));
                EXPECT_EQ(kgraph::meet(kgraph::meet(a, b), c), kgraph::meet(a, kgraph::meet(b, c)));
            }
}

TEST(Degree, DegreesBelowEnumeratesBox) {
    auto all = kgraph::degrees_below({2, 1});
    ASSERT_EQ(all.size(), 6u);
    EXPECT_EQ(all.front(), (Degree{0, 0}));
    EXPECT_EQ(all.back(), (Degree{2, 1}));
}
