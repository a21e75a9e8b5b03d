#include "sigbary/signatures.hpp"

#include <numeric>

namespace sigbary {

PwlPath::PwlPath(RationalMatrix increments) : increments_(std::move(increments))
{
    if (increments_.rows() == 0)
        throw Error("path dimension must be >= 1");
    if (increments_.cols() == 0)
        throw Error("path needs at least one segment");
}

std::vector<RationalVector> PwlPath::vertices() const
{
    std::vector<RationalVector> out;
    RationalVector point(dim());
    out.push_back(point);
    for (std::size_t j = 0; j < segments(); ++j) {
        for (std::size_t r = 0; r < dim(); ++r)
            point[r] += increments_(r, j);
        out.push_back(point);
    }
    return out;
}

Composition::Composition(std::vector<std::size_t> parts) : parts_(std::move(parts))
{
    if (parts_.empty())
        throw Error("composition needs at least one part");
    for (auto p : parts_)
        if (p == 0)
            throw Error("composition parts must be positive");
}

std::size_t Composition::total() const
{
    return std::accumulate(parts_.begin(), parts_.end(), std::size_t{0});
}

std::size_t Composition::odd_count() const
{
    std::size_t n = 0;
    for (auto p : parts_)
        n += p % 2;
    return n;
}

std::size_t Composition::offset(std::size_t i) const
{
    return std::accumulate(parts_.begin(), parts_.begin() + static_cast<std::ptrdiff_t>(i), std::size_t{0});
}

namespace {

void compositions_rec(std::size_t remaining, std::vector<std::size_t>& prefix, std::vector<Composition>& out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (std::size_t p = 1; p <= remaining; ++p) {
        prefix.push_back(p);
        compositions_rec(remaining - p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Composition> compositions_of(std::size_t m)
{
    std::vector<Composition> out;
    if (m == 0)
        return out;
    std::vector<std::size_t> prefix;
    compositions_rec(m, prefix, out);
    return out;
}

TensorSeq sig_segment(std::span<const Rational> v, std::size_t k)
{
    return exp(TensorSeq::from_vector(v, k));
}

TensorSeq sig_unit_segment(std::size_t m, std::size_t j, std::size_t k)
{
    if (j < 1 || j > m)
        throw Error("unit direction out of range");
    RationalVector e(m);
    e[j - 1] = 1;
    return sig_segment(e, k);
}

TensorSeq sig_axis(std::size_t m, std::size_t k)
{
    TensorSeq s = TensorSeq::one(m, k);
    for (std::size_t j = 1; j <= m; ++j)
        s = s * sig_unit_segment(m, j, k);
    return s;
}

TensorSeq sig_axis_subpath(const Composition& alpha, std::size_t i, std::size_t k)
{
    if (i < 1 || i > alpha.length())
        throw Error("axis subpath index out of range");
    const std::size_t m = alpha.total();
    const std::size_t first = alpha.offset(i - 1) + 1;
    TensorSeq s = TensorSeq::one(m, k);
    for (std::size_t j = first; j < first + alpha.parts()[i - 1]; ++j)
        s = s * sig_unit_segment(m, j, k);
    return s;
}

TensorSeq congruence(const RationalMatrix& a, const TensorSeq& z)
{
    if (a.cols() != z.dim())
        throw Error("congruence needs a matrix with " + std::to_string(z.dim()) + " columns");
    const std::size_t d = a.rows();
    const std::size_t m = a.cols();
    TensorSeq out(d, z.level());
    out.at_level(0) = z.at_level(0);
    for (std::size_t l = 1; l <= z.level(); ++l) {
        // Contract one slot at a time; after t steps the first t slots range over d.
        std::vector<Rational> cur = z.at_level(l);
        std::size_t head = 1; // d^t
        std::size_t tail = 1; // m^(l-t-1)
        for (std::size_t t = 1; t < l; ++t)
            tail *= m;
        for (std::size_t t = 0; t < l; ++t) {
            std::vector<Rational> next(head * d * tail);
            for (std::size_t h = 0; h < head; ++h)
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t r = 0; r < tail; ++r) {
                        const Rational& v = cur[(h * m + i) * tail + r];
                        if (v == 0)
                            continue;
                        for (std::size_t w = 0; w < d; ++w)
                            if (a(w, i) != 0)
                                next[(h * d + w) * tail + r] += a(w, i) * v;
                    }
            cur = std::move(next);
            head *= d;
            if (tail > 1)
                tail /= m;
        }
        out.at_level(l) = std::move(cur);
    }
    return out;
}

TensorSeq sig_pwl(const PwlPath& path, std::size_t k)
{
    return congruence(path.increments(), sig_axis(path.segments(), k));
}

TensorSeq sig_pwl_chen(const PwlPath& path, std::size_t k)
{
    TensorSeq s = TensorSeq::one(path.dim(), k);
    for (std::size_t j = 0; j < path.segments(); ++j)
        s = s * sig_segment(path.increments().col(j), k);
    return s;
}

Rational signed_area(const PwlPath& path)
{
    if (path.dim() != 2)
        throw Error("signed area needs a 2-dimensional path");
    const auto v = path.vertices();
    Rational twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        twice += p[0] * q[1] - q[0] * p[1];
    }
    return twice / 2;
}

Rational signed_area_from_signature(const TensorSeq& s)
{
    if (s.dim() != 2 || s.level() < 2)
        throw Error("signed area needs a 2-dimensional signature of level >= 2");
    return (s[Word{1, 2}] - s[Word{2, 1}]) / 2;
}

PwlPath concatenate(const PwlPath& a, const PwlPath& b)
{
    const RationalMatrix parts[] = {a.increments(), b.increments()};
    return PwlPath(hconcat(parts));
}

} // namespace sigbary
