#include "sigbary/barycenter.hpp"

#include "sigbary/matrix.hpp"

#include <cassert>

namespace sigbary {

GroupSample::GroupSample(std::vector<TensorSeq> members) : members_(std::move(members))
{
    if (members_.empty())
        throw Error("a group sample needs at least one member");
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& x = members_[i];
        if (x.dim() != dim() || x.level() != level())
            throw Error("sample members must share (d, k)");
        if (!is_grouplike(x))
            throw Error("sample member " + std::to_string(i + 1) + " is not group-like");
    }
}

TensorSeq bary_residual(const TensorSeq& m, std::span<const TensorSeq> sample)
{
    const TensorSeq m_inv = group_inverse(m);
    TensorSeq r = TensorSeq::zero(m.dim(), m.level());
    for (const auto& x : sample)
        r += log(m_inv * x);
    return r;
}

TensorSeq bary_residual(const TensorSeq& m, const GroupSample& sample)
{
    return bary_residual(m, sample.members());
}

TensorSeq bary(const GroupSample& sample)
{
    const Rational inv_n(1, sample.size());
    TensorSeq m = TensorSeq::one(sample.dim(), sample.level());
    for (std::size_t j = 1; j <= sample.level(); ++j) {
        const TensorSeq r = bary_residual(m, sample);
        auto& mj = m.at_level(j);
        const auto& rj = r.at_level(j);
        for (std::size_t i = 0; i < mj.size(); ++i)
            mj[i] += rj[i] * inv_n;
    }
    assert(bary_residual(m, sample).is_zero());
    assert(is_grouplike(m));
    return m;
}

TensorSeq bary_k2(const GroupSample& sample)
{
    if (sample.level() != 2)
        throw Error("closed-form barycenter needs k = 2");
    const std::size_t d = sample.dim();
    const Rational n(sample.size());
    TensorSeq out = TensorSeq::one(d, 2);
    RationalVector mean(d);
    auto& level2 = out.at_level(2);
    for (const auto& x : sample.members()) {
        const auto& x1 = x.at_level(1);
        const auto& x2 = x.at_level(2);
        const auto sq = outer(x1, x1);
        for (std::size_t i = 0; i < d; ++i)
            mean[i] += x1[i] / n;
        for (std::size_t i = 0; i < d * d; ++i)
            level2[i] += x2[i] / n - sq[i] / (2 * n);
    }
    // (1/2N^2) sum_{i1,i2} x_i1 ⊗ x_i2 = (1/2) mean ⊗ mean
    const auto mm = outer(mean, mean);
    for (std::size_t i = 0; i < d * d; ++i)
        level2[i] += mm[i] / 2;
    out.at_level(1) = mean;
    return out;
}

TensorSeq bary_pair(const TensorSeq& x1, const TensorSeq& x2)
{
    if (!is_grouplike(x1) || !is_grouplike(x2))
        throw Error("bary_pair needs group-like inputs");
    return x1 * exp(Rational(1, 2) * log(group_inverse(x1) * x2));
}

TensorSeq bary_solve_last(std::span<const TensorSeq> fixed, const TensorSeq& target)
{
    if (!is_grouplike(target))
        throw Error("target is not group-like");
    for (const auto& x : fixed) {
        if (x.dim() != target.dim() || x.level() != target.level())
            throw Error("fixed members must share (d, k) with the target");
        if (!is_grouplike(x))
            throw Error("fixed member is not group-like");
    }
    std::vector<TensorSeq> members(fixed.begin(), fixed.end());
    members.push_back(TensorSeq::one(target.dim(), target.level()));
    for (std::size_t j = 1; j <= target.level(); ++j) {
        const TensorSeq r = bary_residual(target, members);
        auto& xj = members.back().at_level(j);
        const auto& rj = r.at_level(j);
        for (std::size_t i = 0; i < xj.size(); ++i)
            xj[i] -= rj[i];
    }
    assert(is_grouplike(members.back()));
    return members.back();
}

} // namespace sigbary
