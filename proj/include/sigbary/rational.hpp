#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sigbary {

/// Exact arbitrary-precision rational; always kept canonical by GMP.
using Rational = mpq_class;

/// Base class for every domain error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical "p/q" text: lowest terms, positive denominator, "0/1" for zero.
std::string to_string(const Rational& value);

/// Parses "p/q" or an integer "p". Throws sigbary::Error on malformed text
/// or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace sigbary
