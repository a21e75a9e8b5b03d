// The reference implementations themselves, pinned on hand-checked values
// before anything is compared against the library.

#include "support/oracles.hpp"

#include <gtest/gtest.h>

using sigbary::Rational;

TEST(Oracle, LyndonCountsSmallCases) {
    EXPECT_EQ(oracle::lyndon_count(2, 1), 2u);
    EXPECT_EQ(oracle::lyndon_count(2, 2), 3u);  // 1, 2, 12
    EXPECT_EQ(oracle::lyndon_count(2, 3), 5u);  // + 112, 122
    EXPECT_EQ(oracle::lyndon_count(3, 2), 6u);  // 1, 2, 3, 12, 13, 23
    EXPECT_EQ(oracle::lyndon_count(2, 4), 8u);  // + 1112, 1122, 1222
}

TEST(Oracle, ShuffleEnumeration) {
    const auto sh = oracle::shuffle({1, 2}, {1});
    ASSERT_EQ(sh.size(), 2u);
    EXPECT_EQ(sh.at({1, 1, 2}), Rational(2));
    EXPECT_EQ(sh.at({1, 2, 1}), Rational(1));
}

TEST(Oracle, SingleSegmentSignature) {
    const auto a = oracle::matrix_of({{2}, {3}});
    EXPECT_EQ(oracle::pwl_coefficient(a, {1, 1}), Rational(2));
    EXPECT_EQ(oracle::pwl_coefficient(a, {1, 2}), Rational(3));
    EXPECT_EQ(oracle::pwl_coefficient(a, {2, 2, 2}), Rational(9, 2));
}

TEST(Oracle, TwoSegmentLevelTwo) {
    // e1 then e2: only the ordered cross term survives
    const auto a = oracle::matrix_of({{1, 0}, {0, 1}});
    EXPECT_EQ(oracle::pwl_coefficient(a, {1, 2}), Rational(1));
    EXPECT_EQ(oracle::pwl_coefficient(a, {2, 1}), Rational(0));
    EXPECT_EQ(oracle::pwl_coefficient(a, {1, 1}), Rational(1, 2));
}
