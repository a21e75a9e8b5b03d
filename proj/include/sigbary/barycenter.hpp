#pragma once

// Lie-group barycenter of group-like tensor sequences: the unique m with
// sum_i log(m^-1 x_i) = 0.

#include "sigbary/tensor_algebra.hpp"

#include <span>
#include <vector>

namespace sigbary {

/// N >= 1 group-like members sharing (d, k). Validated on construction.
class GroupSample {
public:
    explicit GroupSample(std::vector<TensorSeq> members);

    const std::vector<TensorSeq>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    std::size_t dim() const { return members_.front().dim(); }
    std::size_t level() const { return members_.front().level(); }

private:
    std::vector<TensorSeq> members_;
};

/// sum_i log(m^-1 · x_i). Needs constant component 1 in m and every x_i.
TensorSeq bary_residual(const TensorSeq& m, std::span<const TensorSeq> sample);
TensorSeq bary_residual(const TensorSeq& m, const GroupSample& sample);

/// Upward level sweep: level j of the residual has coefficient -N on m^(j)
/// and otherwise depends only on lower levels, so one pass solves it.
TensorSeq bary(const GroupSample& sample);

/// Closed form for k = 2.
TensorSeq bary_k2(const GroupSample& sample);

/// x1 · exp(log(x1^-1 x2) / 2).
TensorSeq bary_pair(const TensorSeq& x1, const TensorSeq& x2);

/// The unique group-like x_N with bary(fixed ∪ {x_N}) = target.
TensorSeq bary_solve_last(std::span<const TensorSeq> fixed, const TensorSeq& target);

} // namespace sigbary
