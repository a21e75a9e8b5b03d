#include "sigbary/barycenter.hpp"
#include "sigbary/congruence_recovery.hpp"
#include "sigbary/property_suite.hpp"

#include "support/golden.hpp"

#include <gtest/gtest.h>

using namespace sigbary;
using oracle::matrix_of;

namespace {

RationalMatrix level2_matrix(const TensorSeq& s) {
    const std::size_t d = s.dim();
    RationalMatrix m(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) m(i, j) = s.at_level(2)[i * d + j];
    return m;
}

RationalMatrix skew(std::size_t m) { return upper_ones(m) - upper_ones(m).transpose(); }

void expect_congruence(const CongruenceResult& r, const RationalMatrix& input) {
    EXPECT_EQ(r.scale_squared * (r.transform * input * r.transform.transpose()), r.normal_form);
    EXPECT_NE(determinant(r.transform), 0);
}

TensorSeq bary_of_subpaths(const Composition& alpha, std::size_t k) {
    std::vector<TensorSeq> xs;
    for (std::size_t i = 1; i <= alpha.length(); ++i) xs.push_back(sig_axis_subpath(alpha, i, k));
    return bary(GroupSample(std::move(xs)));
}

} // namespace

TEST(Canonical, Matrices) {
    EXPECT_EQ(skew(2), block_matrix(CanonicalBlock::H2neg1));
    EXPECT_EQ(alternating_signs(3), matrix_of({{1, 0, 0}, {0, -1, 0}, {0, 0, 1}}));
    EXPECT_EQ(axis_matrix(3), level2_matrix(sig_axis(3, 2)));
    const auto c = canonical_matrices(4);
    EXPECT_EQ(c.identity, RationalMatrix::identity(4));
    EXPECT_EQ(c.ones, RationalMatrix::ones(4, 4));
    EXPECT_THROW(canonical_matrices(0), Error);
}

TEST(SkewAxisNf, Examples) {
    const auto r1 = skew_axis_nf(1);
    EXPECT_EQ(r1.transform, RationalMatrix::identity(1));
    EXPECT_EQ(r1.normal_form, RationalMatrix(1, 1));
    const auto r2 = skew_axis_nf(2);
    EXPECT_EQ(r2.transform, RationalMatrix::identity(2));
    EXPECT_EQ(r2.normal_form, block_matrix(CanonicalBlock::H2neg1));
    EXPECT_EQ(skew_axis_nf(8).transform, golden::skew_transform_8());
}

TEST(SkewAxisNf, AllSizes) {
    for (std::size_t m = 1; m <= 12; ++m) {
        const auto r = skew_axis_nf(m);
        expect_congruence(r, skew(m));
        EXPECT_EQ(r.rank, rank(skew(m)));
    }
}

TEST(SkewAxisInverse, RoundTrips) {
    EXPECT_EQ(skew_axis_inverse(2), matrix_of({{0, -1}, {1, 0}}));
    for (std::size_t m : {4, 6}) EXPECT_EQ(skew_axis_inverse(m) * skew(m), RationalMatrix::identity(m));
    EXPECT_THROW(skew_axis_inverse(3), Error);
}

TEST(AxisMatrixNf, Examples) {
    EXPECT_EQ(axis_matrix_nf(1).normal_form, matrix_of({{1}}));
    EXPECT_EQ(axis_matrix_nf(2).normal_form, block_matrix(CanonicalBlock::Gamma2));
    const std::vector<CanonicalBlock> five{CanonicalBlock::One, CanonicalBlock::H2neg1, CanonicalBlock::H2neg1};
    EXPECT_EQ(axis_matrix_nf(5).normal_form, block_sum(five));
    for (std::size_t m = 1; m <= 12; ++m) {
        const auto r = axis_matrix_nf(m);
        EXPECT_EQ(r.scale_squared, 2);
        expect_congruence(r, axis_matrix(m));
        // the rational part sends the all-ones vector to e1 (e2 after the swap for even m)
        RationalVector ones(m, Rational(1));
        RationalVector e(m);
        e[m % 2 == 1 ? 0 : 1] = 1;
        EXPECT_EQ(r.transform * std::span<const Rational>(ones), e);
    }
}

TEST(WAlpha, Examples) {
    EXPECT_EQ(w_alpha(Composition({4, 6, 2})), golden::w_4_6_2());
    for (std::size_t m = 1; m <= 5; ++m) EXPECT_EQ(w_alpha(Composition({m})), axis_matrix(m));
    EXPECT_EQ(w_alpha(Composition({1, 1})), Rational(1, 8) * RationalMatrix::ones(2, 2));
}

TEST(WAlpha, EqualsLevelTwoOfSubpathBarycenter) {
    for (std::size_t m = 1; m <= 8; ++m)
        for (const auto& alpha : compositions_of(m)) {
            const TensorSeq b = bary_of_subpaths(alpha, 2);
            EXPECT_EQ(level2_matrix(b), w_alpha(alpha));
            EXPECT_EQ(b.at_level(1), RationalVector(m, Rational(1, static_cast<long>(alpha.length()))));
        }
}

TEST(WAlphaProps, Structure) {
    for (std::size_t m = 1; m <= 8; ++m)
        for (const auto& alpha : compositions_of(m)) {
            const auto p = w_alpha_props(alpha);
            const auto n = static_cast<long>(alpha.length());
            const RationalMatrix w = w_alpha(alpha);
            EXPECT_EQ(w.transpose(), Rational(-1) * w + Rational(1, n * n) * RationalMatrix::ones(m, m));
            EXPECT_EQ(p.sym_part, Rational(1, 2 * n * n) * RationalMatrix::ones(m, m));
            EXPECT_EQ(p.skew_rank, m - alpha.odd_count());
            EXPECT_EQ(p.rank, alpha.all_even() ? m : m - alpha.odd_count() + 1);
            EXPECT_EQ(p.inverse.has_value(), alpha.all_even());
            if (p.inverse) EXPECT_EQ(*p.inverse * w, RationalMatrix::identity(m));
        }
    EXPECT_EQ(w_alpha_props(Composition({4, 6, 2})).rank, 12u);
    EXPECT_EQ(w_alpha_props(Composition({5, 4, 3, 4})).rank, 15u);
}

TEST(WAlphaNf, AllEvenGolden) {
    const Composition alpha({4, 6, 2});
    const auto nf = w_alpha_nf(alpha);
    EXPECT_EQ(nf.matrix.transform, golden::transform_4_6_2());
    EXPECT_EQ(nf.matrix.normal_form, axis_matrix(12));
    EXPECT_EQ(nf.vector_image, RationalVector(12, Rational(1)));
}

TEST(WAlphaNf, OddGolden) {
    const Composition alpha({5, 4, 3, 4});
    const auto nf = w_alpha_nf(alpha);
    EXPECT_EQ(nf.matrix.transform, golden::transform_5_4_3_4());
    EXPECT_EQ(nf.matrix.rank, 15u);
    RationalVector image(16, Rational(1));
    image.back() = 0;
    EXPECT_EQ(nf.vector_image, image);
    const RationalMatrix p = golden::transform_5_4_3_4();
    std::vector<RationalMatrix> blocks{axis_matrix(15), RationalMatrix(1, 1)};
    EXPECT_EQ(p * w_alpha(alpha) * p.transpose(), block_diagonal(blocks));
}

TEST(WAlphaNf, SinglePartIsIdentity) {
    for (std::size_t m = 1; m <= 6; ++m) {
        const auto nf = w_alpha_nf(Composition({m}));
        EXPECT_EQ(nf.matrix.transform, RationalMatrix::identity(m));
        EXPECT_EQ(nf.matrix.rank, m);
    }
}

TEST(WAlphaNf, EveryCompositionUpToTen) {
    for (std::size_t m = 1; m <= 10; ++m)
        for (const auto& alpha : compositions_of(m)) {
            const auto nf = w_alpha_nf(alpha);
            const std::size_t r = nf.matrix.rank;
            ASSERT_EQ(r, rank(w_alpha(alpha)));
            std::vector<RationalMatrix> blocks{axis_matrix(r)};
            if (m > r) blocks.emplace_back(m - r, m - r);
            const RationalMatrix& p = nf.matrix.transform;
            EXPECT_EQ(p * w_alpha(alpha) * p.transpose(), block_diagonal(blocks));
            EXPECT_NE(determinant(p), 0);
            RationalVector image(m, Rational(0));
            std::fill(image.begin(), image.begin() + static_cast<long>(r), Rational(1));
            EXPECT_EQ(nf.vector_image, image);
        }
}

TEST(RecoveryOrder, Formula) {
    EXPECT_EQ(recovery_order(2, Composition({1, 1})), 1u);
    EXPECT_EQ(recovery_order(2, Composition({2, 1})), 2u);
    EXPECT_EQ(recovery_order(2, Composition({1, 1, 1})), 1u);
    for (std::size_t d = 2; d <= 14; ++d)
        EXPECT_EQ(recovery_order(d, Composition({4, 6, 2})), std::min<std::size_t>(d, 12));
    EXPECT_THROW(recovery_order(1, Composition({1})), Error);
    for (std::size_t m = 1; m <= 10; ++m)
        for (const auto& alpha : compositions_of(m))
            EXPECT_EQ(recovery_order(std::max<std::size_t>(m, 2), alpha), rank(w_alpha(alpha)));
}

TEST(RecoverK2, TwoSegments) {
    const std::vector<PwlPath> paths{PwlPath(RationalMatrix::column(RationalVector{1, Rational(1, 2)})),
                                     PwlPath(RationalMatrix::column(RationalVector{Rational(1, 2), 1}))};
    const PwlPath y = recover_k2(paths);
    EXPECT_EQ(y.increments(), RationalMatrix::column(RationalVector{Rational(3, 4), Rational(3, 4)}));
    EXPECT_THROW(recover_k2(paths, 3), Error);
}

TEST(RecoverK2, OneSampleKeepsTheSignature) {
    RandomSource rng(12);
    for (int t = 0; t < 10; ++t) {
        const PwlPath p = rng.path(rng.size(2, 4), rng.size(1, 5));
        const std::vector<PwlPath> one{p};
        EXPECT_EQ(sig_pwl(recover_k2(one), 2), sig_pwl(p, 2));
    }
}

TEST(RecoverK2, ThreeUnitSegments) {
    const std::vector<PwlPath> paths{PwlPath(matrix_of({{1}, {0}})), PwlPath(matrix_of({{0}, {1}})),
                                     PwlPath(matrix_of({{1}, {0}}))};
    const PwlPath y = recover_k2(paths);
    EXPECT_EQ(y.segments(), 1u);
    std::vector<TensorSeq> sigs;
    for (const auto& p : paths) sigs.push_back(sig_pwl(p, 2));
    EXPECT_EQ(sig_pwl(y, 2), bary(GroupSample(sigs)));
}

TEST(RecoverK2, RandomSamples) {
    RandomSource rng(13);
    for (int t = 0; t < 30; ++t) {
        const std::size_t d = rng.size(1, 4);
        std::vector<PwlPath> paths;
        std::vector<TensorSeq> sigs;
        std::size_t budget = 8;
        while (budget > 0 && paths.size() < 4) {
            const std::size_t segs = rng.size(1, std::min<std::size_t>(budget, 4));
            budget -= segs;
            paths.push_back(rng.path(d, segs));
            sigs.push_back(sig_pwl(paths.back(), 2));
        }
        const PwlPath y = recover_k2(paths);
        EXPECT_EQ(sig_pwl(y, 2), bary(GroupSample(sigs)));
        EXPECT_EQ(y.segments(), rank(w_alpha(composition_of(paths))));
    }
}

TEST(RecoveryK3, Family) {
    EXPECT_EQ(recovery_family_k3(Rational(1, 4)),
              (RationalMatrix{{1, -1, 1}, {Rational(1, 4), Rational(1, 4), Rational(-1, 2)}}));
    for (const Rational w : {Rational(1, 4), Rational(3, 4), Rational(-1, 4), Rational(7, 5), Rational(-9, 2)}) {
        EXPECT_TRUE(verify_recovery_k3(w));
        EXPECT_EQ(signed_area(PwlPath(recovery_family_k3(w))), 0);
    }
    EXPECT_THROW(recovery_family_k3(0), Error);
}

TEST(RecoveryK3, UnitSegmentsThroughTheFrame) {
    // bary(σ(E1), σ(E2)) is recovered by F^-1·A(w)
    const GroupSample units({sig_unit_segment(2, 1, 3), sig_unit_segment(2, 2, 3)});
    const RationalMatrix f_inv = inverse(recovery_family_k3_frame());
    EXPECT_EQ(f_inv * recovery_family_k3(Rational(1, 4)),
              (RationalMatrix{{Rational(3, 4), Rational(-1, 4), 0}, {Rational(1, 4), Rational(-3, 4), 1}}));
    for (const Rational w : {Rational(1, 4), Rational(-2, 3)})
        EXPECT_EQ(sig_pwl(PwlPath(f_inv * recovery_family_k3(w)), 3), bary(units));
    // the family itself does not hit the unit-segment barycenter
    EXPECT_NE(sig_pwl(PwlPath(recovery_family_k3(Rational(1, 4))), 3), bary(units));
}

TEST(RecoveryK3, LevelTwoRecoveryFallsShortAtLevelThree) {
    // level 2 alone is recovered with one segment; level 3 needs the family
    const std::vector<PwlPath> frame_segments{PwlPath(matrix_of({{1}, {0}})), PwlPath(matrix_of({{0}, {1}}))};
    const PwlPath y2 = recover_k2(frame_segments);
    EXPECT_EQ(y2.segments(), 1u);
    const GroupSample units({sig_unit_segment(2, 1, 3), sig_unit_segment(2, 2, 3)});
    EXPECT_NE(sig_pwl(y2, 3), bary(units));
}
