#pragma once

#include "sigbary/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace sigbary {

using RationalVector = std::vector<Rational>;

/// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix ones(std::size_t rows, std::size_t cols);
    static RationalMatrix diagonal(std::span<const Rational> entries);
    static RationalMatrix column(std::span<const Rational> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector col(std::size_t c) const;

    RationalMatrix transpose() const;
    /// Columns [first, first + count).
    RationalMatrix columns(std::size_t first, std::size_t count) const;
    RationalMatrix rows_range(std::size_t first, std::size_t count) const;
    bool is_zero() const;

    RationalMatrix& operator+=(const RationalMatrix& other);
    RationalMatrix& operator-=(const RationalMatrix& other);
    RationalMatrix& operator*=(const Rational& scalar);

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b);
RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix operator*(const Rational& s, RationalMatrix a);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> v);

/// M1 ⊕ M2 ⊕ ... (block diagonal).
RationalMatrix block_diagonal(std::span<const RationalMatrix> blocks);
/// [A1 A2 ...] with equal row counts.
RationalMatrix hconcat(std::span<const RationalMatrix> blocks);

/// Rank by exact Gaussian elimination.
std::size_t rank(const RationalMatrix& m);
Rational determinant(const RationalMatrix& m);
/// Gauss-Jordan inverse; throws sigbary::Error when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Applies the permutation sending row `order[i]` of the input to row i.
RationalMatrix permutation_matrix(std::span<const std::size_t> order);

} // namespace sigbary
