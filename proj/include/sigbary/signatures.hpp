#pragma once

#include "sigbary/matrix.hpp"
#include "sigbary/tensor_algebra.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace sigbary {

/// Piecewise-linear path from the origin, stored as the d×m matrix of segment
/// increments; it is the path A·Axis^m.
class PwlPath {
public:
    explicit PwlPath(RationalMatrix increments);

    std::size_t dim() const { return increments_.rows(); }
    std::size_t segments() const { return increments_.cols(); }
    const RationalMatrix& increments() const { return increments_; }
    /// m+1 points: the origin followed by cumulative column sums.
    std::vector<RationalVector> vertices() const;

    friend bool operator==(const PwlPath&, const PwlPath&) = default;

private:
    RationalMatrix increments_;
};

/// Ordered tuple of positive segment counts.
class Composition {
public:
    explicit Composition(std::vector<std::size_t> parts);

    const std::vector<std::size_t>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    std::size_t total() const;
    std::size_t odd_count() const;
    bool all_even() const { return odd_count() == 0; }
    /// Offset of part i (0-based) inside 1..total.
    std::size_t offset(std::size_t i) const;

    friend bool operator==(const Composition&, const Composition&) = default;

private:
    std::vector<std::size_t> parts_;
};

/// Every composition of m, in lexicographic order.
std::vector<Composition> compositions_of(std::size_t m);

/// exp(v) with v placed at level 1.
TensorSeq sig_segment(std::span<const Rational> v, std::size_t k);
/// Signature of the unit segment along e_j in R^m (j is 1-based).
TensorSeq sig_unit_segment(std::size_t m, std::size_t j, std::size_t k);
TensorSeq sig_axis(std::size_t m, std::size_t k);
/// Signature of Ax^{alpha,i} in R^m, m = alpha.total(); i is 1-based.
TensorSeq sig_axis_subpath(const Composition& alpha, std::size_t i, std::size_t k);

/// Matrix-tensor congruence: level l gets A acting on every tensor slot.
TensorSeq congruence(const RationalMatrix& a, const TensorSeq& z);

/// congruence(A, sig_axis(m, k)).
TensorSeq sig_pwl(const PwlPath& path, std::size_t k);
/// Chen product of the segment signatures; equal to sig_pwl.
TensorSeq sig_pwl_chen(const PwlPath& path, std::size_t k);

/// Shoelace area of the polygon closed back to the origin; equals
/// (σ12 - σ21)/2 of the level-2 signature. Requires dim 2.
Rational signed_area(const PwlPath& path);
/// (σ12 - σ21)/2 read off the signature.
Rational signed_area_from_signature(const TensorSeq& s);

/// Concatenation: increments of `a` followed by those of `b`.
PwlPath concatenate(const PwlPath& a, const PwlPath& b);

} // namespace sigbary
