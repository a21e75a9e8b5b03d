#include "sigbary/ncpoly.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace sigbary {

std::size_t monomial_level(const Monomial& m)
{
    std::size_t l = 0;
    for (const auto& s : m)
        l += s.level;
    return l;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
    const auto la = monomial_level(a);
    const auto lb = monomial_level(b);
    if (la != lb)
        return la < lb;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

void require_same_context(const NcPoly& a, const NcPoly& b)
{
    if (a.num_samples() != b.num_samples() || a.level() != b.level())
        throw Error("polynomial context mismatch");
}

void validate_symbol(const Symbol& s, std::size_t num_samples, std::size_t level)
{
    if (s.level < 1 || s.level > level)
        throw Error("symbol level " + std::to_string(s.level) + " outside 1.." + std::to_string(level));
    if (s.kind == Symbol::Kind::Sample && (s.sample < 1 || s.sample > num_samples))
        throw Error("sample index " + std::to_string(s.sample) + " outside 1.." + std::to_string(num_samples));
    if (s.kind == Symbol::Kind::Bary && s.sample != 0)
        throw Error("barycenter symbols carry no sample index");
}

} // namespace

NcPoly::NcPoly(std::size_t num_samples, std::size_t level) : num_samples_(num_samples), level_(level)
{
    if (level == 0)
        throw Error("polynomial truncation level must be >= 1");
}

NcPoly NcPoly::constant(std::size_t num_samples, std::size_t level, const Rational& c)
{
    NcPoly p(num_samples, level);
    p.add_term({}, c);
    return p;
}

NcPoly NcPoly::symbol(std::size_t num_samples, std::size_t level, const Symbol& s)
{
    validate_symbol(s, num_samples, level);
    NcPoly p(num_samples, level);
    p.add_term({s}, 1);
    return p;
}

NcPoly NcPoly::free_sample(std::size_t num_samples, std::size_t level, std::size_t index)
{
    NcPoly p = constant(num_samples, level, 1);
    for (std::size_t j = 1; j <= level; ++j)
        p += symbol(num_samples, level, Symbol::sample_symbol(index, j));
    return p;
}

NcPoly NcPoly::free_bary(std::size_t num_samples, std::size_t level)
{
    NcPoly p = constant(num_samples, level, 1);
    for (std::size_t j = 1; j <= level; ++j)
        p += symbol(num_samples, level, Symbol::bary_symbol(j));
    return p;
}

Rational NcPoly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool NcPoly::has_bary_symbols() const
{
    for (const auto& [m, c] : terms_)
        for (const auto& s : m)
            if (s.kind == Symbol::Kind::Bary)
                return true;
    return false;
}

void NcPoly::add_term(const Monomial& m, const Rational& c)
{
    if (c == 0 || monomial_level(m) > level_)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

NcPoly& NcPoly::operator+=(const NcPoly& other)
{
    require_same_context(*this, other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

NcPoly& NcPoly::operator-=(const NcPoly& other)
{
    require_same_context(*this, other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, -c);
    return *this;
}

NcPoly& NcPoly::operator*=(const Rational& s)
{
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= s;
    return *this;
}

NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }
NcPoly operator-(NcPoly a) { return a *= Rational(-1); }
NcPoly operator*(const Rational& s, NcPoly a) { return a *= s; }

NcPoly operator*(const NcPoly& a, const NcPoly& b)
{
    require_same_context(a, b);
    NcPoly out(a.num_samples(), a.level());
    for (const auto& [ma, ca] : a.terms()) {
        const auto la = monomial_level(ma);
        for (const auto& [mb, cb] : b.terms()) {
            // b's terms are ordered by level, so the rest are truncated too.
            if (la + monomial_level(mb) > a.level())
                break;
            Monomial m = ma;
            m.insert(m.end(), mb.begin(), mb.end());
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

NcPoly graded_component(const NcPoly& f, std::size_t j)
{
    if (j > f.level())
        throw Error("graded component " + std::to_string(j) + " above truncation " + std::to_string(f.level()));
    NcPoly out(f.num_samples(), f.level());
    for (const auto& [m, c] : f.terms())
        if (monomial_level(m) == j)
            out.add_term(m, c);
    return out;
}

NcPoly inverse(const NcPoly& f)
{
    const Rational c0 = f.constant_term();
    if (c0 == 0)
        throw Error("polynomial with zero constant term is not invertible");
    // f = c0 (1 + x)  =>  f^-1 = c0^-1 sum (-x)^l
    const auto one = NcPoly::constant(f.num_samples(), f.level(), 1);
    const NcPoly x = Rational(1) / c0 * f - one;
    NcPoly acc = one;
    for (std::size_t n = 0; n < f.level(); ++n)
        acc = one - x * acc;
    return Rational(1) / c0 * acc;
}

NcPoly exp(const NcPoly& f)
{
    if (f.constant_term() != 0)
        throw Error("polynomial exp requires a zero constant term");
    const auto one = NcPoly::constant(f.num_samples(), f.level(), 1);
    NcPoly acc = one;
    for (std::size_t n = f.level(); n >= 1; --n)
        acc = one + Rational(1, n) * (f * acc);
    return acc;
}

NcPoly log(const NcPoly& f)
{
    if (f.constant_term() != 1)
        throw Error("polynomial log requires constant term 1");
    const auto one = NcPoly::constant(f.num_samples(), f.level(), 1);
    const NcPoly x = f - one;
    const std::size_t k = f.level();
    auto coeff = [](std::size_t l) { return Rational(l % 2 == 1 ? 1 : -1, l); };
    NcPoly acc = coeff(k) * one;
    for (std::size_t l = k - 1; l >= 1; --l)
        acc = coeff(l) * one + x * acc;
    return x * acc;
}

NcPoly substitute(const NcPoly& f, const std::map<std::size_t, NcPoly>& bindings)
{
    for (const auto& [j, poly] : bindings)
        require_same_context(f, poly);
    NcPoly out(f.num_samples(), f.level());
    for (const auto& [m, c] : f.terms()) {
        NcPoly term = NcPoly::constant(f.num_samples(), f.level(), c);
        for (const auto& s : m) {
            if (s.kind == Symbol::Kind::Sample) {
                term = term * NcPoly::symbol(f.num_samples(), f.level(), s);
                continue;
            }
            auto it = bindings.find(s.level);
            if (it == bindings.end())
                throw Error("no binding for " + to_string(s));
            term = term * it->second;
            if (term.is_zero())
                break;
        }
        out += term;
    }
    return out;
}

TensorSeq evaluate(const NcPoly& f, std::span<const TensorSeq> sample, const std::optional<TensorSeq>& bary_value)
{
    if (sample.size() != f.num_samples())
        throw Error("evaluation needs " + std::to_string(f.num_samples()) + " sample members, got " +
                    std::to_string(sample.size()));
    const TensorSeq* reference = !sample.empty() ? &sample.front() : (bary_value ? &*bary_value : nullptr);
    if (reference == nullptr)
        throw Error("evaluation needs at least one tensor sequence to fix (d, k)");
    const std::size_t d = reference->dim();
    const std::size_t k = reference->level();
    if (k != f.level())
        throw Error("evaluation level mismatch: polynomial " + std::to_string(f.level()) + ", tensors " +
                    std::to_string(k));
    for (const auto& x : sample)
        if (x.dim() != d || x.level() != k)
            throw Error("sample members must share (d, k)");
    if (bary_value && (bary_value->dim() != d || bary_value->level() != k))
        throw Error("barycenter value must share (d, k) with the sample");

    TensorSeq out(d, k);
    for (const auto& [m, c] : f.terms()) {
        std::vector<Rational> acc{c};
        for (const auto& s : m) {
            const TensorSeq* source = nullptr;
            if (s.kind == Symbol::Kind::Sample) {
                source = &sample[s.sample - 1];
            } else {
                if (!bary_value)
                    throw Error("unbound barycenter symbol " + to_string(s));
                source = &*bary_value;
            }
            acc = outer(acc, source->at_level(s.level));
        }
        auto& target = out.at_level(monomial_level(m));
        for (std::size_t i = 0; i < acc.size(); ++i)
            target[i] += acc[i];
    }
    return out;
}

BaryConstruction build_bary_construction(std::size_t num_samples, std::size_t level)
{
    if (num_samples == 0 || level == 0)
        throw Error("barycenter polynomial needs N >= 1 and k >= 1");
    const std::size_t n = num_samples, k = level;
    const NcPoly y = NcPoly::free_bary(n, k);
    const NcPoly y_inv = inverse(y);

    NcPoly g(n, k);
    for (std::size_t i = 1; i <= n; ++i)
        g += log(y_inv * NcPoly::free_sample(n, k, i));
    g *= Rational(1, n);

    BaryConstruction out{g, {}, {}, NcPoly::constant(n, k, 1)};
    const NcPoly g_plus_y = g + y;
    for (std::size_t j = 1; j <= k; ++j) {
        out.f.push_back(graded_component(g_plus_y, j));
        std::map<std::size_t, NcPoly> bindings;
        for (std::size_t l = 1; l <= k; ++l)
            bindings.emplace(l, l < j ? out.p[l - 1] : NcPoly(n, k));
        out.p.push_back(substitute(out.f.back(), bindings));
        out.q += out.p.back();
    }
    return out;
}

const NcPoly& build_bary_poly(std::size_t num_samples, std::size_t level)
{
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, NcPoly> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find({num_samples, level});
        if (it != cache.end())
            return it->second;
    }
    NcPoly q = build_bary_construction(num_samples, level).q;
    std::lock_guard lock(mutex);
    // std::map never invalidates references on insert.
    return cache.try_emplace({num_samples, level}, std::move(q)).first->second;
}

std::string to_string(const Symbol& s)
{
    std::ostringstream os;
    if (s.kind == Symbol::Kind::Sample)
        os << "s_" << s.sample << "^(" << s.level << ")";
    else
        os << "y^(" << s.level << ")";
    return os.str();
}

std::string to_string(const NcPoly& f)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const Rational mag = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        const std::string coeff = mag.get_den() == 1 ? mag.get_num().get_str() : mag.get_str();
        if (m.empty()) {
            os << coeff;
            continue;
        }
        if (mag != 1)
            os << coeff << "*";
        for (std::size_t i = 0; i < m.size(); ++i)
            os << (i ? "*" : "") << to_string(m[i]);
    }
    return os.str();
}

} // namespace sigbary
