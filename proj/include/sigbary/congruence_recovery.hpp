#pragma once

// Exact congruence normal forms for the level-2 barycenter matrices of axis
// subpaths, and constructive recovery of piecewise-linear paths at k = 2.

#include "sigbary/matrix.hpp"
#include "sigbary/signatures.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace sigbary {

enum class CanonicalBlock { Gamma2, H2neg1, One, Zero };

RationalMatrix block_matrix(CanonicalBlock kind);
/// Block-diagonal sum of canonical blocks.
RationalMatrix block_sum(std::span<const CanonicalBlock> blocks);

RationalMatrix upper_ones(std::size_t m);       ///< U_m
RationalMatrix alternating_signs(std::size_t m); ///< Q_m = diag(1, -1, 1, ...)
RationalMatrix axis_matrix(std::size_t m);       ///< C_m = I/2 + U_m

struct CanonicalMatrices {
    RationalMatrix upper;       ///< U_m
    RationalMatrix alternating; ///< Q_m
    RationalMatrix axis;        ///< C_m
    RationalMatrix identity;    ///< I_m
    RationalMatrix ones;        ///< m×m all-ones
};

CanonicalMatrices canonical_matrices(std::size_t m);

/// P with scale_squared · P · M · P^T = normal_form, P invertible. A scale
/// other than 1 stands for the irrational factor sqrt(scale_squared) in
/// front of P.
struct CongruenceResult {
    RationalMatrix transform;
    RationalMatrix normal_form;
    std::size_t rank = 0;
    Rational scale_squared = 1;
};

/// Normal form of U_m - U_m^T: H2(-1) blocks, plus a trailing 0 for odd m.
CongruenceResult skew_axis_nf(std::size_t m);
/// Q_m (U_m - U_m^T) Q_m; m must be even.
RationalMatrix skew_axis_inverse(std::size_t m);
/// Normal form of C_m: Γ2 ⊕ H2(-1)... for even m, 1 ⊕ H2(-1)... for odd m.
/// The transform carries scale_squared = 2.
CongruenceResult axis_matrix_nf(std::size_t m);

/// (1/2N) ⊕_i (U_ai - U_ai^T) + (1/2N^2) 1_{m×m}
RationalMatrix w_alpha(const Composition& alpha);

struct WAlphaProperties {
    RationalMatrix skew_part;
    RationalMatrix sym_part;
    std::size_t rank = 0;
    std::size_t skew_rank = 0;
    /// 4N^2 Q W Q, present when every part is even.
    std::optional<RationalMatrix> inverse;
};

WAlphaProperties w_alpha_props(const Composition& alpha);

/// P with P W_alpha P^T = C_r ⊕ 0 and P (1/N) 1_m = (1_r ; 0), r = rank W_alpha.
struct SimultaneousTransform {
    CongruenceResult matrix;
    RationalVector vector_image;
};

SimultaneousTransform w_alpha_nf(const Composition& alpha);

/// B_{d,2}(alpha): min(d, rank W_alpha); needs d >= 2.
std::size_t recovery_order(std::size_t d, const Composition& alpha);

Composition composition_of(std::span<const PwlPath> paths);

/// Path A·U with sig_pwl(result, 2) = bary of the input signatures at k = 2,
/// where A concatenates the input increments and U is the first r columns of
/// the inverse normal-form transform. The result has rank(W_alpha) segments.
PwlPath recover_k2(std::span<const PwlPath> paths, std::size_t k = 2);

/// A(w) = [[1, -1, 1], [w, 1/(8w) - w, -1/(8w)]]; throws for w = 0.
RationalMatrix recovery_family_k3(const Rational& omega);
/// F = [[1, 1], [1/2, -1/2]]; the family recovers the barycenter of the two
/// segments F·E^1 and F·E^2, so F^-1·A(w) recovers bary(σ(E^1), σ(E^2)).
RationalMatrix recovery_family_k3_frame();
/// bary(σ(F·E^1), σ(F·E^2)) in T_{2,3}.
TensorSeq recovery_family_k3_target();
/// sig_pwl(A(w)·Axis^3, 3) == recovery_family_k3_target().
bool verify_recovery_k3(const Rational& omega);

} // namespace sigbary
