#include "sigbary/property_suite.hpp"

#include "sigbary/barycenter.hpp"
#include "sigbary/congruence_recovery.hpp"
#include "sigbary/ncpoly.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace sigbary {

std::size_t RandomSource::size(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
}

Rational RandomSource::rational(long num_bound, long den_bound) {
    const long p = std::uniform_int_distribution<long>(-num_bound, num_bound)(engine_);
    const long q = std::uniform_int_distribution<long>(1, den_bound)(engine_);
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational RandomSource::nonzero_rational(long num_bound, long den_bound) {
    Rational r;
    do r = rational(num_bound, den_bound);
    while (r == 0);
    return r;
}

RationalVector RandomSource::vector(std::size_t n) {
    RationalVector v(n);
    for (auto& x : v) x = rational();
    return v;
}

RationalMatrix RandomSource::matrix(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rational();
    return m;
}

PwlPath RandomSource::path(std::size_t d, std::size_t segments) { return PwlPath(matrix(d, segments)); }

TensorSeq RandomSource::grouplike(std::size_t d, std::size_t k) { return sig_pwl(path(d, size(1, 3)), k); }

TensorSeq RandomSource::nilpotent(std::size_t d, std::size_t k) {
    TensorSeq z(d, k);
    for (std::size_t l = 1; l <= k; ++l)
        for (auto& c : z.at_level(l)) c = rational();
    return z;
}

std::vector<TensorSeq> RandomSource::sample(std::size_t n, std::size_t d, std::size_t k) {
    std::vector<TensorSeq> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(grouplike(d, k));
    return out;
}

namespace {

using Check = std::function<std::optional<std::string>(RandomSource&)>;

struct Shape {
    std::size_t d, k, n;
};

Shape random_shape(RandomSource& rng, std::size_t max_n = 4) {
    return {rng.size(1, 3), rng.size(1, 3), rng.size(1, max_n)};
}

std::string shape_text(const Shape& s) {
    return "d=" + std::to_string(s.d) + " k=" + std::to_string(s.k) + " N=" + std::to_string(s.n);
}

std::optional<std::string> fail_unless(bool ok, const std::string& what) {
    if (ok) return std::nullopt;
    return what;
}

std::vector<TensorSeq> mapped(const std::vector<TensorSeq>& xs, const std::function<TensorSeq(const TensorSeq&)>& f) {
    std::vector<TensorSeq> out;
    for (const auto& x : xs) out.push_back(f(x));
    return out;
}

TensorSeq bary_of(std::vector<TensorSeq> xs) { return bary(GroupSample(std::move(xs))); }

const std::vector<std::pair<std::string, Check>>& registry() {
    static const std::vector<std::pair<std::string, Check>> checks = {
        {"bary_residual_zero",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const GroupSample sample(rng.sample(s.n, s.d, s.k));
             const TensorSeq m = bary(sample);
             return fail_unless(bary_residual(m, sample).is_zero() && is_grouplike(m), shape_text(s));
         }},
        {"left_equivariance",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const auto xs = rng.sample(s.n, s.d, s.k);
             const TensorSeq g = rng.grouplike(s.d, s.k);
             const auto gx = mapped(xs, [&](const TensorSeq& x) { return g * x; });
             return fail_unless(bary_of(gx) == g * bary_of(xs), shape_text(s));
         }},
        {"right_equivariance",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const auto xs = rng.sample(s.n, s.d, s.k);
             const TensorSeq g = rng.grouplike(s.d, s.k);
             const auto xg = mapped(xs, [&](const TensorSeq& x) { return x * g; });
             return fail_unless(bary_of(xg) == bary_of(xs) * g, shape_text(s));
         }},
        {"inverse_equivariance",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const auto xs = rng.sample(s.n, s.d, s.k);
             const auto inv = mapped(xs, [](const TensorSeq& x) { return group_inverse(x); });
             return fail_unless(bary_of(inv) == group_inverse(bary_of(xs)), shape_text(s));
         }},
        {"congruence_equivariance",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const auto xs = rng.sample(s.n, s.d, s.k);
             const RationalMatrix a = rng.matrix(rng.size(1, 3), s.d);
             const auto ax = mapped(xs, [&](const TensorSeq& x) { return congruence(a, x); });
             return fail_unless(bary_of(ax) == congruence(a, bary_of(xs)), shape_text(s));
         }},
        {"permutation_invariance",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             auto xs = rng.sample(s.n, s.d, s.k);
             const TensorSeq before = bary_of(xs);
             std::shuffle(xs.begin(), xs.end(), rng.engine());
             return fail_unless(bary_of(xs) == before, shape_text(s));
         }},
        {"power_sample_law",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const TensorSeq x = rng.grouplike(s.d, s.k);
             std::vector<long> u(s.n);
             long total = 0;
             for (auto& e : u) total += (e = static_cast<long>(rng.size(0, 6)) - 3);
             // adjust the last exponent so N divides the sum
             const long n = static_cast<long>(s.n);
             const long shift = ((total % n) + n) % n;
             u.back() -= shift;
             total -= shift;
             std::vector<TensorSeq> xs;
             for (long e : u) xs.push_back(power(x, e));
             return fail_unless(bary_of(xs) == power(x, total / n), shape_text(s));
         }},
        {"pair_closed_form",
         [](RandomSource& rng) {
             Shape s = random_shape(rng);
             s.n = 2;
             const auto xs = rng.sample(2, s.d, s.k);
             return fail_unless(bary_pair(xs[0], xs[1]) == bary_of(xs), shape_text(s));
         }},
        {"level2_closed_form",
         [](RandomSource& rng) {
             Shape s = random_shape(rng);
             s.k = 2;
             const GroupSample sample(rng.sample(s.n, s.d, 2));
             return fail_unless(bary_k2(sample) == bary(sample), shape_text(s));
         }},
        {"solve_last_round_trip",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             auto fixed = rng.sample(s.n - 1, s.d, s.k);
             const TensorSeq target = rng.grouplike(s.d, s.k);
             const TensorSeq last = bary_solve_last(fixed, target);
             fixed.push_back(last);
             return fail_unless(is_grouplike(last) && bary_of(fixed) == target, shape_text(s));
         }},
        {"chen_identity",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const PwlPath a = rng.path(s.d, rng.size(1, 3));
             const PwlPath b = rng.path(s.d, rng.size(1, 3));
             const bool ok = sig_pwl(concatenate(a, b), s.k) == sig_pwl(a, s.k) * sig_pwl(b, s.k) &&
                             sig_pwl(a, s.k) == sig_pwl_chen(a, s.k);
             return fail_unless(ok, shape_text(s));
         }},
        {"signature_congruence",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const PwlPath p = rng.path(s.d, rng.size(1, 4));
             const RationalMatrix a = rng.matrix(rng.size(1, 3), s.d);
             const bool ok = sig_pwl(PwlPath(a * p.increments()), s.k) == congruence(a, sig_pwl(p, s.k));
             return fail_unless(ok, shape_text(s));
         }},
        {"grouplike_closure",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const TensorSeq x = rng.grouplike(s.d, s.k);
             const TensorSeq y = rng.grouplike(s.d, s.k);
             const bool ok = is_grouplike(x * y) && is_grouplike(group_inverse(x)) &&
                             group_inverse_series(x) == group_inverse_exp_log(x) &&
                             is_grouplike(power(x, Rational(1, 2)));
             return fail_unless(ok, shape_text(s));
         }},
        {"exp_log_round_trip",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng);
             const TensorSeq z = rng.nilpotent(s.d, s.k);
             const TensorSeq x = rng.grouplike(s.d, s.k);
             return fail_unless(log(exp(z)) == z && exp(log(x)) == x, shape_text(s));
         }},
        {"shuffle_mass",
         [](RandomSource& rng) {
             const std::size_t d = rng.size(1, 3);
             auto word = [&](std::size_t len) {
                 std::vector<int> letters(len);
                 for (auto& c : letters) c = static_cast<int>(rng.size(1, d));
                 return Word(letters);
             };
             const std::size_t lu = rng.size(0, 4);
             const std::size_t lv = rng.size(0, 4);
             const WordCombination sh = shuffle_product(word(lu), word(lv));
             Rational mass = 0;
             for (const auto& [w, c] : sh) {
                 if (w.size() != lu + lv) return std::optional<std::string>("wrong word length");
                 mass += c;
             }
             mpz_class binom;
             mpz_bin_uiui(binom.get_mpz_t(), lu + lv, lu);
             return fail_unless(mass == Rational(binom), "|u|=" + std::to_string(lu) + " |v|=" + std::to_string(lv));
         }},
        {"segments_in_segment_out",
         [](RandomSource& rng) {
             const std::size_t d = rng.size(1, 3);
             const std::size_t n = rng.size(1, 4);
             std::vector<PwlPath> paths;
             std::vector<TensorSeq> sigs;
             for (std::size_t i = 0; i < n; ++i) {
                 paths.push_back(rng.path(d, 1));
                 sigs.push_back(sig_pwl(paths.back(), 2));
             }
             const PwlPath out = recover_k2(paths);
             return fail_unless(out.segments() == 1 && sig_pwl(out, 2) == bary_of(sigs),
                                "d=" + std::to_string(d) + " N=" + std::to_string(n));
         }},
        {"recovery_k2_exact",
         [](RandomSource& rng) {
             const std::size_t d = rng.size(1, 4);
             const std::size_t n = rng.size(1, 4);
             std::vector<PwlPath> paths;
             std::vector<TensorSeq> sigs;
             std::size_t budget = 8;
             for (std::size_t i = 0; i < n && budget > 0; ++i) {
                 const std::size_t segs = rng.size(1, std::min<std::size_t>(3, budget));
                 budget -= segs;
                 paths.push_back(rng.path(d, segs));
                 sigs.push_back(sig_pwl(paths.back(), 2));
             }
             const PwlPath out = recover_k2(paths);
             const Composition alpha = composition_of(paths);
             const bool ok = sig_pwl(out, 2) == bary_of(sigs) && out.segments() == rank(w_alpha(alpha));
             return fail_unless(ok, "d=" + std::to_string(d) + " N=" + std::to_string(paths.size()));
         }},
        {"poly_route_matches_solver",
         [](RandomSource& rng) {
             const Shape s = random_shape(rng, 3);
             const auto xs = rng.sample(s.n, s.d, s.k);
             const TensorSeq via_poly = evaluate(build_bary_poly(s.n, s.k), xs);
             return fail_unless(via_poly == bary_of(xs), shape_text(s));
         }},
    };
    return checks;
}

} // namespace

std::vector<std::string> property_names() {
    std::vector<std::string> out;
    for (const auto& [name, _] : registry()) out.push_back(name);
    return out;
}

PropertyResult run_property(std::string_view name, const PropertyConfig& config) {
    const auto& checks = registry();
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const auto& c) { return c.first == name; });
    if (it == checks.end()) throw Error("unknown property: " + std::string(name));
    // each property gets its own stream so results do not depend on run order
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : name) h = (h ^ c) * 1099511628211ull;
    RandomSource rng(config.seed ^ h);
    PropertyResult result{it->first, 0, 0, {}};
    for (std::size_t i = 0; i < config.instances; ++i) {
        ++result.instances;
        std::optional<std::string> failure;
        try {
            failure = it->second(rng);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        if (failure) {
            if (result.failures == 0) result.first_failure = "instance " + std::to_string(i) + ": " + *failure;
            ++result.failures;
        }
    }
    return result;
}

std::vector<PropertyResult> run_property_suite(const PropertyConfig& config) {
    std::vector<PropertyResult> out;
    for (const auto& name : property_names()) out.push_back(run_property(name, config));
    return out;
}

} // namespace sigbary
