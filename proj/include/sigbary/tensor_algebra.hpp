#pragma once

// Truncated tensor algebra T_{d,k}: dense rational tensor sequences with the
// truncated product, exp/log, group inverse and shuffle-based group tests.

#include "sigbary/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace sigbary {

/// A word over the letters 1..d. The empty word is allowed.
class Word {
public:
    Word() = default;
    explicit Word(std::vector<int> letters);
    Word(std::initializer_list<int> letters) : Word(std::vector<int>(letters)) {}

    const std::vector<int>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    friend auto operator<=>(const Word&, const Word&) = default;

private:
    std::vector<int> letters_;
};

/// Formal linear combination of words.
using WordCombination = std::map<Word, Rational>;

/// Element of T_{d,k}. levels()[l] holds d^l entries in row-major multi-index
/// order; index of word w is sum (w_j - 1) d^(l-j).
class TensorSeq {
public:
    /// The zero sequence. Throws sigbary::Error if dim or level is zero.
    TensorSeq(std::size_t dim, std::size_t level);
    TensorSeq(std::size_t dim, std::size_t level, std::vector<std::vector<Rational>> levels);

    static TensorSeq zero(std::size_t dim, std::size_t level) { return TensorSeq(dim, level); }
    static TensorSeq one(std::size_t dim, std::size_t level);
    /// 0 ⊕ v ⊕ 0 ⊕ ...
    static TensorSeq from_vector(std::span<const Rational> v, std::size_t level);

    std::size_t dim() const { return dim_; }
    std::size_t level() const { return level_; }

    const std::vector<std::vector<Rational>>& levels() const { return levels_; }
    std::vector<Rational>& at_level(std::size_t l);
    const std::vector<Rational>& at_level(std::size_t l) const;

    const Rational& constant() const { return levels_[0][0]; }

    /// Coefficient <s, w>; the word length selects the level.
    const Rational& operator[](const Word& w) const;
    Rational& operator[](const Word& w);

    /// Same sequence with every level above `level` dropped.
    TensorSeq truncated(std::size_t level) const;
    bool is_zero() const;

    TensorSeq& operator+=(const TensorSeq& other);
    TensorSeq& operator-=(const TensorSeq& other);
    TensorSeq& operator*=(const Rational& s);

    friend bool operator==(const TensorSeq&, const TensorSeq&) = default;

private:
    std::size_t dim_;
    std::size_t level_;
    std::vector<std::vector<Rational>> levels_;
};

TensorSeq operator+(TensorSeq a, const TensorSeq& b);
TensorSeq operator-(TensorSeq a, const TensorSeq& b);
TensorSeq operator-(TensorSeq a);
TensorSeq operator*(const Rational& s, TensorSeq a);
/// Truncated tensor-algebra product.
TensorSeq operator*(const TensorSeq& x, const TensorSeq& y);

/// a·x + b·y.
TensorSeq linear_combine(const Rational& a, const TensorSeq& x, const Rational& b, const TensorSeq& y);
TensorSeq mul(const TensorSeq& x, const TensorSeq& y);

/// Outer product of an l-tensor and an n-tensor over dimension d.
std::vector<Rational> outer(std::span<const Rational> a, std::span<const Rational> b);

/// Requires a zero constant component.
TensorSeq exp(const TensorSeq& z);
/// Requires constant component 1.
TensorSeq log(const TensorSeq& s);

/// Group inverse. Debug builds cross-check the two routes below.
TensorSeq group_inverse(const TensorSeq& z);
/// sum_l (-(z - 1))^l
TensorSeq group_inverse_series(const TensorSeq& z);
/// exp(-log z)
TensorSeq group_inverse_exp_log(const TensorSeq& z);

/// z^n for any integer n (negative powers go through the group inverse).
TensorSeq power(const TensorSeq& z, long n);
/// exp(t · log z) for group-like z.
TensorSeq power(const TensorSeq& z, const Rational& t);

/// Lie bracket xy - yx.
TensorSeq bracket(const TensorSeq& x, const TensorSeq& y);

WordCombination shuffle_product(const Word& u, const Word& v);

/// Constant term 1 and every shuffle relation <s,u⧢v> = <s,u><s,v> with
/// 1 <= |u| <= |v|, |u| + |v| <= k.
bool is_grouplike(const TensorSeq& s);

/// Dimension of the free nilpotent Lie algebra, via the Möbius-weighted
/// necklace count.
std::size_t lie_algebra_dim(std::size_t d, std::size_t k);

/// All words of the given length over 1..d, in index order.
std::vector<Word> words_of_length(std::size_t d, std::size_t length);

} // namespace sigbary
