#include "sigbary/signatures.hpp"

#include "sigbary/property_suite.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace sigbary;
using oracle::matrix_of;

TEST(PwlPath, Validation) {
    EXPECT_THROW(PwlPath(RationalMatrix(2, 0)), Error);
    EXPECT_THROW(PwlPath(RationalMatrix(0, 2)), Error);
    const PwlPath p(matrix_of({{1, 2}, {3, -1}}));
    const auto v = p.vertices();
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v[0], (RationalVector{0, 0}));
    EXPECT_EQ(v[2], (RationalVector{3, 2}));
}

TEST(Composition, Basics) {
    EXPECT_THROW(Composition({}), Error);
    EXPECT_THROW(Composition({2, 0}), Error);
    const Composition a({5, 4, 3, 4});
    EXPECT_EQ(a.total(), 16u);
    EXPECT_EQ(a.odd_count(), 2u);
    EXPECT_EQ(a.offset(2), 9u);
    // 2^(m-1) compositions of m
    for (std::size_t m = 1; m <= 8; ++m) EXPECT_EQ(compositions_of(m).size(), std::size_t{1} << (m - 1));
}

TEST(SigSegment, Examples) {
    EXPECT_EQ(sig_segment(RationalVector{0, 0, 0}, 3), TensorSeq::one(3, 3));
    const RationalVector v{Rational(2, 3), -1};
    const TensorSeq s = sig_segment(v, 2);
    EXPECT_EQ(s.at_level(2), (RationalVector{Rational(2, 9), Rational(-1, 3), Rational(-1, 3), Rational(1, 2)}));
    EXPECT_EQ(sig_unit_segment(3, 2, 2), sig_segment(RationalVector{0, 1, 0}, 2));
}

TEST(SigAxis, ThreeAtLevelTwo) {
    const TensorSeq s = sig_axis(3, 2);
    const Rational h(1, 2);
    EXPECT_EQ(s.at_level(1), (RationalVector{1, 1, 1}));
    EXPECT_EQ(s.at_level(2), (RationalVector{h, 1, 1, 0, h, 1, 0, 0, h}));
    EXPECT_EQ(sig_axis(1, 3), sig_unit_segment(1, 1, 3));
}

TEST(SigAxis, LevelTwoIsHalfIdentityPlusUpperOnes) {
    for (std::size_t m = 1; m <= 8; ++m) {
        const TensorSeq s = sig_axis(m, 2);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                EXPECT_EQ(s.at_level(2)[i * m + j], i == j ? Rational(1, 2) : Rational(i < j ? 1 : 0));
    }
}

TEST(SigAxisSubpath, Examples) {
    EXPECT_EQ(sig_axis_subpath(Composition({3}), 1, 3), sig_axis(3, 3));
    const TensorSeq s = sig_axis_subpath(Composition({1, 2}), 2, 2);
    EXPECT_EQ(s.at_level(1), (RationalVector{0, 1, 1}));
    const Rational h(1, 2);
    EXPECT_EQ(s.at_level(2), (RationalVector{0, 0, 0, 0, h, 1, 0, 0, h}));
    EXPECT_THROW(sig_axis_subpath(Composition({1, 2}), 3, 2), Error);
}

TEST(SigAxisSubpath, ProductIsTheAxis) {
    for (std::size_t m = 1; m <= 6; ++m)
        for (const auto& alpha : compositions_of(m)) {
            TensorSeq prod = TensorSeq::one(m, 3);
            for (std::size_t i = 1; i <= alpha.length(); ++i) prod = prod * sig_axis_subpath(alpha, i, 3);
            EXPECT_EQ(prod, sig_axis(m, 3));
        }
}

TEST(Congruence, IdentityAndComposition) {
    RandomSource rng(3);
    const TensorSeq z = rng.grouplike(3, 3);
    EXPECT_EQ(congruence(RationalMatrix::identity(3), z), z);
    for (int t = 0; t < 10; ++t) {
        const RationalMatrix a = rng.matrix(2, 4), b = rng.matrix(4, 3);
        EXPECT_EQ(congruence(a, congruence(b, z)), congruence(a * b, z));
    }
    EXPECT_THROW(congruence(RationalMatrix::identity(2), z), Error);
}

TEST(Congruence, TwoByTwoEntries) {
    // level 2, entry (1,2): a11 a21 / 2 + a11 a22 + a12 a22 / 2
    const RationalMatrix a = matrix_of({{2, 3}, {5, 7}});
    const TensorSeq s = congruence(a, sig_axis(2, 2));
    EXPECT_EQ(s.at_level(1), (RationalVector{2 + 3, 5 + 7}));
    EXPECT_EQ((s[{1, 1}]), Rational(4, 2) + 6 + Rational(9, 2));
    EXPECT_EQ((s[{1, 2}]), Rational(10, 2) + 14 + Rational(21, 2));
    EXPECT_EQ((s[{2, 1}]), Rational(10, 2) + 15 + Rational(21, 2));
    EXPECT_EQ((s[{2, 2}]), Rational(25, 2) + 35 + Rational(49, 2));
}

TEST(SigPwl, MatchesIteratedSumOracle) {
    RandomSource rng(5);
    for (int t = 0; t < 25; ++t) {
        const std::size_t d = rng.size(1, 3), m = rng.size(1, 4), k = rng.size(1, 4);
        const PwlPath p = rng.path(d, m);
        const TensorSeq s = sig_pwl(p, k);
        EXPECT_EQ(s, oracle::pwl_signature(p.increments(), k));
        EXPECT_EQ(s, sig_pwl_chen(p, k));
        EXPECT_TRUE(is_grouplike(s));
    }
}

TEST(SigPwl, SegmentExample) {
    EXPECT_EQ(sig_pwl(PwlPath(RationalMatrix::column(RationalVector{1, Rational(1, 2)})), 2),
              sig_segment(RationalVector{1, Rational(1, 2)}, 2));
    EXPECT_EQ(sig_pwl(PwlPath(RationalMatrix::identity(4)), 3), sig_axis(4, 3));
}

TEST(SignedArea, Examples) {
    EXPECT_EQ(signed_area(PwlPath(matrix_of({{1, 0, -1, 0}, {0, 1, 0, -1}}))), Rational(1));
    EXPECT_EQ(signed_area(PwlPath(matrix_of({{3}, {-2}}))), Rational(0));
    EXPECT_THROW(signed_area(PwlPath(matrix_of({{1}, {1}, {1}}))), Error);
}

TEST(SignedArea, ShoelaceMatchesSignature) {
    RandomSource rng(9);
    for (int t = 0; t < 40; ++t) {
        const PwlPath p = rng.path(2, rng.size(1, 6));
        EXPECT_EQ(signed_area(p), signed_area_from_signature(sig_pwl(p, 2)));
    }
}

TEST(Concatenate, ChenIdentity) {
    const PwlPath a(matrix_of({{1, 2}, {0, -1}}));
    const PwlPath b(matrix_of({{-3}, {4}}));
    EXPECT_EQ(concatenate(a, b).segments(), 3u);
    EXPECT_EQ(sig_pwl(concatenate(a, b), 4), sig_pwl(a, 4) * sig_pwl(b, 4));
    EXPECT_THROW(concatenate(a, PwlPath(matrix_of({{1}}))), Error);
}
