#include "sigbary/tensor_algebra.hpp"

#include <cassert>
#include <string>

namespace sigbary {

namespace {

std::size_t ipow(std::size_t base, std::size_t exponent)
{
    std::size_t r = 1;
    while (exponent-- > 0)
        r *= base;
    return r;
}

void require_same_shape(const TensorSeq& x, const TensorSeq& y)
{
    if (x.dim() != y.dim() || x.level() != y.level())
        throw Error("tensor sequence shape mismatch: (" + std::to_string(x.dim()) + "," +
                    std::to_string(x.level()) + ") vs (" + std::to_string(y.dim()) + "," +
                    std::to_string(y.level()) + ")");
}

} // namespace

Word::Word(std::vector<int> letters) : letters_(std::move(letters))
{
    for (int a : letters_)
        if (a < 1)
            throw Error("letter " + std::to_string(a) + " out of range");
}

TensorSeq::TensorSeq(std::size_t dim, std::size_t level) : dim_(dim), level_(level)
{
    if (dim == 0 || level == 0)
        throw Error("tensor sequences need dim >= 1 and level >= 1");
    levels_.resize(level + 1);
    for (std::size_t l = 0; l <= level; ++l)
        levels_[l].resize(ipow(dim, l));
}

TensorSeq::TensorSeq(std::size_t dim, std::size_t level, std::vector<std::vector<Rational>> levels)
    : TensorSeq(dim, level)
{
    if (levels.size() != level + 1)
        throw Error("expected " + std::to_string(level + 1) + " levels, got " + std::to_string(levels.size()));
    for (std::size_t l = 0; l <= level; ++l)
        if (levels[l].size() != levels_[l].size())
            throw Error("level " + std::to_string(l) + " has " + std::to_string(levels[l].size()) +
                        " entries, expected " + std::to_string(levels_[l].size()));
    levels_ = std::move(levels);
}

TensorSeq TensorSeq::one(std::size_t dim, std::size_t level)
{
    TensorSeq t(dim, level);
    t.levels_[0][0] = 1;
    return t;
}

TensorSeq TensorSeq::from_vector(std::span<const Rational> v, std::size_t level)
{
    TensorSeq t(v.size(), level);
    t.levels_[1].assign(v.begin(), v.end());
    return t;
}

std::vector<Rational>& TensorSeq::at_level(std::size_t l)
{
    if (l > level_)
        throw Error("level " + std::to_string(l) + " above truncation " + std::to_string(level_));
    return levels_[l];
}

const std::vector<Rational>& TensorSeq::at_level(std::size_t l) const
{
    if (l > level_)
        throw Error("level " + std::to_string(l) + " above truncation " + std::to_string(level_));
    return levels_[l];
}

namespace {

std::size_t word_index(const Word& w, std::size_t dim)
{
    std::size_t idx = 0;
    for (int a : w.letters()) {
        if (static_cast<std::size_t>(a) > dim)
            throw Error("letter " + std::to_string(a) + " exceeds dimension " + std::to_string(dim));
        idx = idx * dim + static_cast<std::size_t>(a - 1);
    }
    return idx;
}

} // namespace

const Rational& TensorSeq::operator[](const Word& w) const
{
    return at_level(w.size())[word_index(w, dim_)];
}

Rational& TensorSeq::operator[](const Word& w)
{
    return at_level(w.size())[word_index(w, dim_)];
}

TensorSeq TensorSeq::truncated(std::size_t level) const
{
    if (level > level_)
        throw Error("cannot truncate to a higher level");
    std::vector<std::vector<Rational>> lv(levels_.begin(), levels_.begin() + static_cast<std::ptrdiff_t>(level + 1));
    return TensorSeq(dim_, level, std::move(lv));
}

bool TensorSeq::is_zero() const
{
    for (const auto& lv : levels_)
        for (const auto& x : lv)
            if (x != 0)
                return false;
    return true;
}

TensorSeq& TensorSeq::operator+=(const TensorSeq& other)
{
    require_same_shape(*this, other);
    for (std::size_t l = 0; l <= level_; ++l)
        for (std::size_t i = 0; i < levels_[l].size(); ++i)
            levels_[l][i] += other.levels_[l][i];
    return *this;
}

TensorSeq& TensorSeq::operator-=(const TensorSeq& other)
{
    require_same_shape(*this, other);
    for (std::size_t l = 0; l <= level_; ++l)
        for (std::size_t i = 0; i < levels_[l].size(); ++i)
            levels_[l][i] -= other.levels_[l][i];
    return *this;
}

TensorSeq& TensorSeq::operator*=(const Rational& s)
{
    for (auto& lv : levels_)
        for (auto& x : lv)
            x *= s;
    return *this;
}

TensorSeq operator+(TensorSeq a, const TensorSeq& b) { return a += b; }
TensorSeq operator-(TensorSeq a, const TensorSeq& b) { return a -= b; }
TensorSeq operator-(TensorSeq a) { return a *= Rational(-1); }
TensorSeq operator*(const Rational& s, TensorSeq a) { return a *= s; }

std::vector<Rational> outer(std::span<const Rational> a, std::span<const Rational> b)
{
    std::vector<Rational> c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i * b.size() + j] = a[i] * b[j];
    }
    return c;
}

TensorSeq operator*(const TensorSeq& x, const TensorSeq& y)
{
    require_same_shape(x, y);
    const std::size_t k = x.level();
    TensorSeq out(x.dim(), k);
    for (std::size_t a = 0; a <= k; ++a) {
        const auto& xa = x.at_level(a);
        for (std::size_t b = 0; a + b <= k; ++b) {
            const auto& yb = y.at_level(b);
            auto& target = out.at_level(a + b);
            for (std::size_t i = 0; i < xa.size(); ++i) {
                if (xa[i] == 0)
                    continue;
                const std::size_t base = i * yb.size();
                for (std::size_t j = 0; j < yb.size(); ++j)
                    if (yb[j] != 0)
                        target[base + j] += xa[i] * yb[j];
            }
        }
    }
    return out;
}

TensorSeq mul(const TensorSeq& x, const TensorSeq& y) { return x * y; }

TensorSeq linear_combine(const Rational& a, const TensorSeq& x, const Rational& b, const TensorSeq& y)
{
    require_same_shape(x, y);
    return a * x + b * y;
}

TensorSeq exp(const TensorSeq& z)
{
    if (z.constant() != 0)
        throw Error("exp requires a zero constant component");
    const auto one = TensorSeq::one(z.dim(), z.level());
    // Horner: 1 + z(1 + z/2(1 + z/3(...)))
    TensorSeq acc = one;
    for (std::size_t n = z.level(); n >= 1; --n)
        acc = one + Rational(1, n) * (z * acc);
    return acc;
}

TensorSeq log(const TensorSeq& s)
{
    if (s.constant() != 1)
        throw Error("log requires constant component 1");
    const auto one = TensorSeq::one(s.dim(), s.level());
    const TensorSeq x = s - one;
    const std::size_t k = s.level();
    auto coeff = [](std::size_t l) { return Rational(l % 2 == 1 ? 1 : -1, l); };
    TensorSeq acc = coeff(k) * one;
    for (std::size_t l = k - 1; l >= 1; --l)
        acc = coeff(l) * one + x * acc;
    return x * acc;
}

TensorSeq group_inverse_series(const TensorSeq& z)
{
    if (z.constant() != 1)
        throw Error("group inverse requires constant component 1");
    const auto one = TensorSeq::one(z.dim(), z.level());
    const TensorSeq x = z - one;
    TensorSeq acc = one;
    for (std::size_t n = 0; n < z.level(); ++n)
        acc = one - x * acc;
    return acc;
}

TensorSeq group_inverse_exp_log(const TensorSeq& z)
{
    if (z.constant() != 1)
        throw Error("group inverse requires constant component 1");
    return exp(-log(z));
}

TensorSeq group_inverse(const TensorSeq& z)
{
    TensorSeq inv = group_inverse_series(z);
    assert(inv == group_inverse_exp_log(z));
    return inv;
}

TensorSeq power(const TensorSeq& z, long n)
{
    if (n < 0)
        return power(group_inverse(z), -n);
    TensorSeq result = TensorSeq::one(z.dim(), z.level());
    TensorSeq base = z;
    auto e = static_cast<unsigned long>(n);
    while (e > 0) {
        if (e & 1U)
            result = result * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return result;
}

TensorSeq power(const TensorSeq& z, const Rational& t)
{
    return exp(t * log(z));
}

TensorSeq bracket(const TensorSeq& x, const TensorSeq& y)
{
    return x * y - y * x;
}

namespace {

void shuffle_into(const std::vector<int>& u, std::size_t nu, const std::vector<int>& v, std::size_t nv,
                  std::vector<int>& suffix, WordCombination& out)
{
    // Shuffles u[0..nu) with v[0..nv) and appends the reversed suffix.
    if (nu == 0 || nv == 0) {
        std::vector<int> w(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(nu));
        w.insert(w.end(), v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nv));
        w.insert(w.end(), suffix.rbegin(), suffix.rend());
        out[Word(std::move(w))] += 1;
        return;
    }
    suffix.push_back(u[nu - 1]);
    shuffle_into(u, nu - 1, v, nv, suffix, out);
    suffix.back() = v[nv - 1];
    shuffle_into(u, nu, v, nv - 1, suffix, out);
    suffix.pop_back();
}

} // namespace

WordCombination shuffle_product(const Word& u, const Word& v)
{
    WordCombination out;
    std::vector<int> suffix;
    shuffle_into(u.letters(), u.size(), v.letters(), v.size(), suffix, out);
    return out;
}

std::vector<Word> words_of_length(std::size_t d, std::size_t length)
{
    const std::size_t count = ipow(d, length);
    std::vector<Word> words;
    words.reserve(count);
    std::vector<int> letters(length);
    for (std::size_t idx = 0; idx < count; ++idx) {
        std::size_t rem = idx;
        for (std::size_t j = length; j-- > 0;) {
            letters[j] = static_cast<int>(rem % d) + 1;
            rem /= d;
        }
        words.emplace_back(letters);
    }
    return words;
}

bool is_grouplike(const TensorSeq& s)
{
    if (s.constant() != 1)
        return false;
    const std::size_t k = s.level();
    const std::size_t d = s.dim();
    for (std::size_t lu = 1; 2 * lu <= k; ++lu) {
        const auto us = words_of_length(d, lu);
        for (std::size_t lv = lu; lu + lv <= k; ++lv) {
            const auto vs = words_of_length(d, lv);
            for (const auto& u : us)
                for (const auto& v : vs) {
                    Rational lhs = 0;
                    for (const auto& [w, c] : shuffle_product(u, v))
                        lhs += c * s[w];
                    if (lhs != s[u] * s[v])
                        return false;
                }
        }
    }
    return true;
}

namespace {

int moebius(std::size_t n)
{
    int mu = 1;
    for (std::size_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        mu = -mu;
    }
    if (n > 1)
        mu = -mu;
    return mu;
}

} // namespace

std::size_t lie_algebra_dim(std::size_t d, std::size_t k)
{
    if (d == 0 || k == 0)
        throw Error("lie_algebra_dim needs d >= 1 and k >= 1");
    long long total = 0;
    for (std::size_t l = 1; l <= k; ++l) {
        long long necklaces = 0;
        for (std::size_t a = 1; a <= l; ++a)
            if (l % a == 0)
                necklaces += moebius(a) * static_cast<long long>(ipow(d, l / a));
        total += necklaces / static_cast<long long>(l);
    }
    return static_cast<std::size_t>(total);
}

} // namespace sigbary
