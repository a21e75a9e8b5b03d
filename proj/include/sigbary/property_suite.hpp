#pragma once

// Randomized exact property checks shared by the CLI `verify` command and the
// test suites.

#include "sigbary/signatures.hpp"
#include "sigbary/tensor_algebra.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace sigbary {

/// Small random rationals, paths and group-like elements from a seeded engine.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

    std::size_t size(std::size_t lo, std::size_t hi);
    /// p/q with |p| <= num_bound, 1 <= q <= den_bound.
    Rational rational(long num_bound = 4, long den_bound = 3);
    Rational nonzero_rational(long num_bound = 4, long den_bound = 3);
    RationalVector vector(std::size_t n);
    RationalMatrix matrix(std::size_t rows, std::size_t cols);
    PwlPath path(std::size_t d, std::size_t segments);
    /// Signature of a random path with 1 to 3 segments.
    TensorSeq grouplike(std::size_t d, std::size_t k);
    /// Random element with zero constant term.
    TensorSeq nilpotent(std::size_t d, std::size_t k);
    std::vector<TensorSeq> sample(std::size_t n, std::size_t d, std::size_t k);

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

struct PropertyConfig {
    std::uint64_t seed = 20240917;
    std::size_t instances = 50;
};

struct PropertyResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    std::string first_failure;

    bool passed() const { return failures == 0 && instances > 0; }
};

std::vector<std::string> property_names();
/// Throws sigbary::Error for an unknown name.
PropertyResult run_property(std::string_view name, const PropertyConfig& config);
std::vector<PropertyResult> run_property_suite(const PropertyConfig& config);

} // namespace sigbary
