#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace operadkit {

/// Exact rational scalar over arbitrary-precision integers.
///
/// mpq_class arithmetic keeps values in lowest terms with a positive denominator;
/// values entering from text must go through parse_rational, which canonicalizes.
using Rational = mpq_class;

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

inline int sign_power(long long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

}  // namespace operadkit
