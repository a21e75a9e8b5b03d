#include "sigbary/matrix.hpp"

#include <utility>

namespace sigbary {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols)
{
}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw Error("ragged matrix literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols)
{
    RationalMatrix m(rows, cols);
    for (auto& x : m.data_)
        x = 1;
    return m;
}

RationalMatrix RationalMatrix::diagonal(std::span<const Rational> entries)
{
    RationalMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, i) = entries[i];
    return m;
}

RationalMatrix RationalMatrix::column(std::span<const Rational> entries)
{
    RationalMatrix m(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m(i, 0) = entries[i];
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const
{
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::col(std::size_t c) const
{
    RationalVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::columns(std::size_t first, std::size_t count) const
{
    if (first + count > cols_)
        throw Error("column range out of bounds");
    RationalMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c)
            out(r, c) = (*this)(r, first + c);
    return out;
}

RationalMatrix RationalMatrix::rows_range(std::size_t first, std::size_t count) const
{
    if (first + count > rows_)
        throw Error("row range out of bounds");
    RationalMatrix out(count, cols_);
    for (std::size_t r = 0; r < count; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            out(r, c) = (*this)(first + r, c);
    return out;
}

bool RationalMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix shape mismatch in addition");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix shape mismatch in subtraction");
    for (std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& scalar)
{
    for (auto& x : data_)
        x *= scalar;
    return *this;
}

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) { return a += b; }
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) { return a -= b; }
RationalMatrix operator*(const Rational& s, RationalMatrix a) { return a *= s; }

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols() != b.rows())
        throw Error("matrix shape mismatch in product");
    RationalMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Rational& ail = a(i, l);
            if (ail == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += ail * b(l, j);
        }
    return out;
}

RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v)
{
    if (a.cols() != v.size())
        throw Error("matrix-vector shape mismatch");
    RationalVector out(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out[i] += a(i, j) * v[j];
    return out;
}

RationalMatrix block_diagonal(std::span<const RationalMatrix> blocks)
{
    std::size_t rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    RationalMatrix out(rows, cols);
    std::size_t r0 = 0, c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r0 + r, c0 + c) = b(r, c);
        r0 += b.rows();
        c0 += b.cols();
    }
    return out;
}

RationalMatrix hconcat(std::span<const RationalMatrix> blocks)
{
    if (blocks.empty())
        return {};
    const std::size_t rows = blocks.front().rows();
    std::size_t cols = 0;
    for (const auto& b : blocks) {
        if (b.rows() != rows)
            throw Error("row count mismatch in horizontal concatenation");
        cols += b.cols();
    }
    RationalMatrix out(rows, cols);
    std::size_t c0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < b.cols(); ++c)
                out(r, c0 + c) = b(r, c);
        c0 += b.cols();
    }
    return out;
}

namespace {

// Row-echelon reduction in place; returns the rank and tracks the sign of row swaps.
std::size_t eliminate(RationalMatrix& m, int* swap_sign = nullptr)
{
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
        std::size_t p = pivot_row;
        while (p < m.rows() && m(p, c) == 0)
            ++p;
        if (p == m.rows())
            continue;
        if (p != pivot_row) {
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m(p, j), m(pivot_row, j));
            if (swap_sign)
                *swap_sign = -*swap_sign;
        }
        for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0)
                continue;
            const Rational f = m(r, c) / m(pivot_row, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(r, j) -= f * m(pivot_row, j);
        }
        ++pivot_row;
    }
    return pivot_row;
}

} // namespace

std::size_t rank(const RationalMatrix& m)
{
    RationalMatrix work = m;
    return eliminate(work);
}

Rational determinant(const RationalMatrix& m)
{
    if (!m.is_square())
        throw Error("determinant of a non-square matrix");
    RationalMatrix work = m;
    int sign = 1;
    if (eliminate(work, &sign) < m.rows())
        return 0;
    Rational det = sign;
    for (std::size_t i = 0; i < m.rows(); ++i)
        det *= work(i, i);
    return det;
}

RationalMatrix inverse(const RationalMatrix& m)
{
    if (!m.is_square())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c) == 0)
            ++p;
        if (p == n)
            throw Error("matrix is singular");
        if (p != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(p, j), a(c, j));
                std::swap(inv(p, j), inv(c, j));
            }
        const Rational pivot = a(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            a(c, j) /= pivot;
            inv(c, j) /= pivot;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a(r, c) == 0)
                continue;
            const Rational f = a(r, c);
            for (std::size_t j = 0; j < n; ++j) {
                a(r, j) -= f * a(c, j);
                inv(r, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

RationalMatrix permutation_matrix(std::span<const std::size_t> order)
{
    RationalMatrix p(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        if (order[i] >= order.size())
            throw Error("permutation index out of range");
        p(i, order[i]) = 1;
    }
    return p;
}

} // namespace sigbary
