#pragma once

// Free associative algebra over leveled symbols s_i^(j) (sample i, level j)
// and y^(j) (barycenter, level j), truncated by the level grading.

#include "sigbary/rational.hpp"
#include "sigbary/tensor_algebra.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigbary {

struct Symbol {
    enum class Kind { Sample, Bary };

    Kind kind = Kind::Sample;
    std::size_t sample = 0; ///< 1-based, 0 for Bary
    std::size_t level = 1;

    static Symbol sample_symbol(std::size_t index, std::size_t level) { return {Kind::Sample, index, level}; }
    static Symbol bary_symbol(std::size_t level) { return {Kind::Bary, 0, level}; }

    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Product of symbols, read left to right.
using Monomial = std::vector<Symbol>;

std::size_t monomial_level(const Monomial& m);

/// Level first, then lexicographic on the symbol tuple.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class NcPoly {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    /// The zero polynomial with N sample slots and truncation level k.
    NcPoly(std::size_t num_samples, std::size_t level);

    static NcPoly constant(std::size_t num_samples, std::size_t level, const Rational& c);
    static NcPoly symbol(std::size_t num_samples, std::size_t level, const Symbol& s);
    /// 1 + s_i^(1) + ... + s_i^(k)
    static NcPoly free_sample(std::size_t num_samples, std::size_t level, std::size_t index);
    /// 1 + y^(1) + ... + y^(k)
    static NcPoly free_bary(std::size_t num_samples, std::size_t level);

    std::size_t num_samples() const { return num_samples_; }
    std::size_t level() const { return level_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient({}); }
    bool has_bary_symbols() const;

    /// Adds c·m; drops the term when it cancels or exceeds the truncation.
    void add_term(const Monomial& m, const Rational& c);

    NcPoly& operator+=(const NcPoly& other);
    NcPoly& operator-=(const NcPoly& other);
    NcPoly& operator*=(const Rational& s);

    friend bool operator==(const NcPoly&, const NcPoly&) = default;

private:
    std::size_t num_samples_;
    std::size_t level_;
    Terms terms_;
};

NcPoly operator+(NcPoly a, const NcPoly& b);
NcPoly operator-(NcPoly a, const NcPoly& b);
NcPoly operator-(NcPoly a);
NcPoly operator*(const Rational& s, NcPoly a);
/// Truncated product: monomials above the level are discarded.
NcPoly operator*(const NcPoly& a, const NcPoly& b);

/// Terms of level exactly j.
NcPoly graded_component(const NcPoly& f, std::size_t j);
/// Geometric-series inverse; needs a nonzero constant term.
NcPoly inverse(const NcPoly& f);
NcPoly exp(const NcPoly& f);
NcPoly log(const NcPoly& f);

/// Replaces y^(j) by bindings.at(j); sample symbols stay.
NcPoly substitute(const NcPoly& f, const std::map<std::size_t, NcPoly>& bindings);

/// Algebra morphism s_i^(j) -> level j of sample[i-1], y^(j) -> level j of
/// `bary_value` (required iff f has bary symbols).
TensorSeq evaluate(const NcPoly& f, std::span<const TensorSeq> sample,
                   const std::optional<TensorSeq>& bary_value = std::nullopt);

/// Intermediate polynomials of the symbolic barycenter: g from the barycenter
/// condition, f_j = π_j(g + y^(j)) and p_j with every y eliminated.
struct BaryConstruction {
    NcPoly g;
    std::vector<NcPoly> f; ///< f[j-1] = f_j
    std::vector<NcPoly> p; ///< p[j-1] = p_j
    NcPoly q;              ///< 1 + sum p_j
};

BaryConstruction build_bary_construction(std::size_t num_samples, std::size_t level);
/// Memoized per (N, k); safe to call from several threads.
const NcPoly& build_bary_poly(std::size_t num_samples, std::size_t level);

std::string to_string(const Symbol& s);
/// Terms by level then lexicographic, e.g. "1 + 1/2*s_1^(1) - 1/4*s_1^(1)*y^(1)".
std::string to_string(const NcPoly& f);

} // namespace sigbary
