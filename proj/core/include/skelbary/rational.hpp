#ifndef SKELBARY_RATIONAL_HPP
#define SKELBARY_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>

namespace skelbary {

// Exact arbitrary-precision scalars. GMP keeps rationals canonical:
// lowest terms, denominator > 0.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Parses "a/b" or "a" (optional leading minus, decimal digits only).
/// Throws std::invalid_argument on any other input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Lowest-terms "a/b", or "a" when the denominator is 1. Round-trips
/// bit-exactly through parse_rational.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

inline int sign(const Rational& q) { return q.sign(); }

}  // namespace skelbary

#endif
