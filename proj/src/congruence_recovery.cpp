#include "sigbary/congruence_recovery.hpp"

#include "sigbary/barycenter.hpp"

#include <algorithm>
#include <cassert>

namespace sigbary {

namespace {

void require_positive(std::size_t m, const char* what) {
    if (m == 0) throw Error(std::string(what) + ": size must be positive");
}

// 1-based helpers keep the index formulas readable.
void add_at(RationalMatrix& p, std::size_t i, std::size_t j, const Rational& v) { p(i - 1, j - 1) += v; }

RationalMatrix scalar_identity(std::size_t m, const Rational& s) {
    RationalMatrix out = RationalMatrix::identity(m);
    out *= s;
    return out;
}

RationalMatrix skew_part_of(std::size_t m) { return upper_ones(m) - upper_ones(m).transpose(); }

// Rational part of the normal-form transform for C_m; the true transform is
// sqrt(2) times this.
RationalMatrix axis_transform(std::size_t m) {
    RationalMatrix r = RationalMatrix::identity(m);
    for (std::size_t s = 2; s <= m; ++s) add_at(r, s, 1, -1);
    for (std::size_t i = 1; 2 * i + 1 <= m; ++i) {
        const std::size_t c = m - 2 * (i - 1);
        for (std::size_t j = 1; j <= m - 2 * i; ++j) {
            add_at(r, j, c, 1);
            add_at(r, j, c - 1, -1);
        }
    }
    if (m % 2 == 0) {
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < m; ++i) order[i] = i;
        std::swap(order[0], order[1]);
        r = permutation_matrix(order) * r;
    }
    return r;
}

RationalMatrix skew_transform(std::size_t m) {
    RationalMatrix p = RationalMatrix::identity(m);
    for (std::size_t i = 1; 2 * i + 1 <= m; ++i) {
        RationalMatrix step = RationalMatrix::identity(m);
        for (std::size_t j = 2 * i + 1; j <= m; ++j) {
            add_at(step, j, 2 * i - 1, 1);
            add_at(step, j, 2 * i, -1);
        }
        p = step * p;
    }
    return p;
}

std::vector<CanonicalBlock> skew_blocks(std::size_t m) {
    std::vector<CanonicalBlock> blocks(m / 2, CanonicalBlock::H2neg1);
    if (m % 2 == 1) blocks.push_back(CanonicalBlock::Zero);
    return blocks;
}

std::vector<CanonicalBlock> axis_blocks(std::size_t m) {
    std::vector<CanonicalBlock> blocks;
    if (m % 2 == 0) {
        blocks.push_back(CanonicalBlock::Gamma2);
        blocks.insert(blocks.end(), (m - 2) / 2, CanonicalBlock::H2neg1);
    } else {
        blocks.push_back(CanonicalBlock::One);
        blocks.insert(blocks.end(), (m - 1) / 2, CanonicalBlock::H2neg1);
    }
    return blocks;
}

RationalMatrix axis_nf_with_zeros(std::size_t r, std::size_t m) {
    std::vector<RationalMatrix> parts{axis_matrix(r)};
    if (m > r) parts.emplace_back(m - r, m - r);
    return block_diagonal(parts);
}

SimultaneousTransform finish(RationalMatrix p, const Composition& alpha, std::size_t r) {
    const std::size_t m = alpha.total();
    const Rational inv_n(1, static_cast<long>(alpha.length()));
    RationalVector scaled(m, inv_n);
    SimultaneousTransform out;
    out.vector_image = p * std::span<const Rational>(scaled);
    out.matrix.normal_form = axis_nf_with_zeros(r, m);
    out.matrix.rank = r;
    out.matrix.transform = std::move(p);
    assert(out.matrix.transform * w_alpha(alpha) * out.matrix.transform.transpose() == out.matrix.normal_form);
    return out;
}

SimultaneousTransform nf_all_even(const Composition& alpha) {
    const std::size_t m = alpha.total();
    const Rational n(static_cast<long>(alpha.length()));
    const RationalMatrix q = alternating_signs(m);

    std::vector<RationalMatrix> blocks_t;
    for (std::size_t a : alpha.parts()) blocks_t.push_back(upper_ones(a).transpose());
    RationalMatrix p1 = RationalMatrix::identity(m) - (upper_ones(m).transpose() - block_diagonal(blocks_t)) * q;

    RationalMatrix lower(m, m);
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t i = 2 * (j / 2) + 1; i <= m; ++i) add_at(lower, i, j, 1);
    RationalMatrix p2 = RationalMatrix::identity(m) + (n - 1) * (lower * q);

    return finish(p2 * p1, alpha, m);
}

SimultaneousTransform nf_with_odd(const Composition& alpha) {
    const std::size_t m = alpha.total();
    const std::size_t big_n = alpha.length();
    const Rational n(static_cast<long>(big_n));

    // Rotate the blocks so the first part is odd.
    std::size_t first_odd = 0;
    while (alpha.parts()[first_odd] % 2 == 0) ++first_odd;
    std::vector<std::size_t> parts;
    std::vector<std::size_t> coord_order;
    for (std::size_t t = 0; t < big_n; ++t) {
        const std::size_t b = (first_odd + t) % big_n;
        parts.push_back(alpha.parts()[b]);
        for (std::size_t c = 0; c < alpha.parts()[b]; ++c) coord_order.push_back(alpha.offset(b) + c);
    }
    const RationalMatrix rotate = permutation_matrix(coord_order);
    const std::size_t a1 = parts.front();

    RationalMatrix p1 = RationalMatrix::identity(m);
    for (std::size_t i = a1 + 1; i <= m; ++i)
        for (std::size_t j = 1; j <= a1; ++j) add_at(p1, i, j, j % 2 == 0 ? 1 : -1);

    RationalMatrix head = scalar_identity(a1, n);
    for (std::size_t j = 1; 2 * j + 1 <= a1; ++j)
        for (std::size_t i = 2 * j; i <= a1; ++i) {
            add_at(head, i, 2 * j - 1, n - 1);
            add_at(head, i, 2 * j, 1 - n);
        }
    std::vector<RationalMatrix> p2_blocks{head};
    if (m > a1) p2_blocks.push_back(RationalMatrix::identity(m - a1));
    const RationalMatrix p2 = block_diagonal(p2_blocks);

    // Block-wise normal forms, then scale each later H pair by diag(1, N) and
    // push the zero rows of odd later blocks to the end.
    std::vector<RationalMatrix> p3_blocks{axis_transform(a1)};
    std::vector<Rational> scale(a1, Rational(1));
    std::vector<bool> zero_row(a1, false);
    for (std::size_t b = 1; b < parts.size(); ++b) {
        const std::size_t a = parts[b];
        p3_blocks.push_back(skew_transform(a));
        for (std::size_t c = 0; c < a; ++c) {
            const bool trailing = (a % 2 == 1) && c + 1 == a;
            scale.push_back(!trailing && c % 2 == 1 ? n : Rational(1));
            zero_row.push_back(trailing);
        }
    }
    const RationalMatrix p3 = block_diagonal(p3_blocks);
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < m; ++i)
        if (!zero_row[i]) order.push_back(i);
    const std::size_t r = order.size();
    for (std::size_t i = 0; i < m; ++i)
        if (zero_row[i]) order.push_back(i);

    std::vector<RationalMatrix> undo{inverse(axis_transform(r))};
    if (m > r) undo.push_back(RationalMatrix::identity(m - r));

    RationalMatrix p = block_diagonal(undo) * permutation_matrix(order) * RationalMatrix::diagonal(scale) * p3 * p2 *
                       p1 * rotate;
    return finish(std::move(p), alpha, r);
}

} // namespace

RationalMatrix block_matrix(CanonicalBlock kind) {
    switch (kind) {
    case CanonicalBlock::Gamma2: return RationalMatrix{{0, -1}, {1, 1}};
    case CanonicalBlock::H2neg1: return RationalMatrix{{0, 1}, {-1, 0}};
    case CanonicalBlock::One: return RationalMatrix{{1}};
    case CanonicalBlock::Zero: return RationalMatrix{{0}};
    }
    throw Error("unknown canonical block");
}

RationalMatrix block_sum(std::span<const CanonicalBlock> blocks) {
    std::vector<RationalMatrix> ms;
    ms.reserve(blocks.size());
    for (auto b : blocks) ms.push_back(block_matrix(b));
    return block_diagonal(ms);
}

RationalMatrix upper_ones(std::size_t m) {
    RationalMatrix u(m, m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) u(i, j) = 1;
    return u;
}

RationalMatrix alternating_signs(std::size_t m) {
    RationalMatrix q(m, m);
    for (std::size_t i = 0; i < m; ++i) q(i, i) = i % 2 == 0 ? 1 : -1;
    return q;
}

RationalMatrix axis_matrix(std::size_t m) { return scalar_identity(m, Rational(1, 2)) + upper_ones(m); }

CanonicalMatrices canonical_matrices(std::size_t m) {
    require_positive(m, "canonical_matrices");
    return {upper_ones(m), alternating_signs(m), axis_matrix(m), RationalMatrix::identity(m), RationalMatrix::ones(m, m)};
}

CongruenceResult skew_axis_nf(std::size_t m) {
    require_positive(m, "skew_axis_nf");
    CongruenceResult out;
    out.transform = skew_transform(m);
    const auto blocks = skew_blocks(m);
    out.normal_form = block_sum(blocks);
    out.rank = 2 * (m / 2);
    assert(out.transform * skew_part_of(m) * out.transform.transpose() == out.normal_form);
    return out;
}

RationalMatrix skew_axis_inverse(std::size_t m) {
    require_positive(m, "skew_axis_inverse");
    if (m % 2 != 0) throw Error("U_m - U_m^T is singular for odd m");
    const RationalMatrix q = alternating_signs(m);
    return q * skew_part_of(m) * q;
}

CongruenceResult axis_matrix_nf(std::size_t m) {
    require_positive(m, "axis_matrix_nf");
    CongruenceResult out;
    out.transform = axis_transform(m);
    const auto blocks = axis_blocks(m);
    out.normal_form = block_sum(blocks);
    out.rank = m;
    out.scale_squared = 2;
    assert(out.scale_squared * (out.transform * axis_matrix(m) * out.transform.transpose()) == out.normal_form);
    return out;
}

RationalMatrix w_alpha(const Composition& alpha) {
    const std::size_t m = alpha.total();
    const long n = static_cast<long>(alpha.length());
    std::vector<RationalMatrix> blocks;
    for (std::size_t a : alpha.parts()) blocks.push_back(skew_part_of(a));
    RationalMatrix w = Rational(1, 2 * n) * block_diagonal(blocks);
    w += Rational(1, 2 * n * n) * RationalMatrix::ones(m, m);
    return w;
}

WAlphaProperties w_alpha_props(const Composition& alpha) {
    const std::size_t m = alpha.total();
    const long n = static_cast<long>(alpha.length());
    const RationalMatrix w = w_alpha(alpha);
    WAlphaProperties out;
    out.skew_part = Rational(1, 2) * (w - w.transpose());
    out.sym_part = Rational(1, 2) * (w + w.transpose());
    out.rank = rank(w);
    out.skew_rank = rank(out.skew_part);
    if (alpha.all_even()) {
        const RationalMatrix q = alternating_signs(m);
        out.inverse = Rational(4 * n * n) * (q * w * q);
    }
    return out;
}

SimultaneousTransform w_alpha_nf(const Composition& alpha) {
    return alpha.all_even() ? nf_all_even(alpha) : nf_with_odd(alpha);
}

std::size_t recovery_order(std::size_t d, const Composition& alpha) {
    if (d < 2) throw Error("recovery needs dimension at least 2");
    const std::size_t m = alpha.total();
    return std::min(d, alpha.all_even() ? m : m - alpha.odd_count() + 1);
}

Composition composition_of(std::span<const PwlPath> paths) {
    std::vector<std::size_t> parts;
    for (const auto& p : paths) parts.push_back(p.segments());
    return Composition(std::move(parts));
}

PwlPath recover_k2(std::span<const PwlPath> paths, std::size_t k) {
    if (k != 2) throw Error("constructive recovery is only available at level 2");
    if (paths.empty()) throw Error("recovery needs at least one path");
    const std::size_t d = paths.front().dim();
    std::vector<RationalMatrix> incs;
    for (const auto& p : paths) {
        if (p.dim() != d) throw Error("paths must share a dimension");
        incs.push_back(p.increments());
    }
    const Composition alpha = composition_of(paths);
    const SimultaneousTransform nf = w_alpha_nf(alpha);
    const RationalMatrix u = inverse(nf.matrix.transform).columns(0, nf.matrix.rank);
    return PwlPath(hconcat(incs) * u);
}

RationalMatrix recovery_family_k3(const Rational& omega) {
    if (omega == 0) throw Error("omega must be nonzero");
    const Rational e = 1 / (8 * omega);
    return RationalMatrix{{1, -1, 1}, {omega, e - omega, -e}};
}

RationalMatrix recovery_family_k3_frame() { return RationalMatrix{{1, 1}, {Rational(1, 2), Rational(-1, 2)}}; }

TensorSeq recovery_family_k3_target() {
    const RationalMatrix a = recovery_family_k3_frame();
    const GroupSample sample({congruence(a, sig_unit_segment(2, 1, 3)), congruence(a, sig_unit_segment(2, 2, 3))});
    return bary(sample);
}

bool verify_recovery_k3(const Rational& omega) {
    const PwlPath path(recovery_family_k3(omega));
    return sig_pwl(path, 3) == recovery_family_k3_target();
}

} // namespace sigbary
