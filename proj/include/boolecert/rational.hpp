#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace boolecert {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, kept in lowest terms with a positive
// denominator. Arithmetic is exact; construction from floating point
// is explicit (rational_from_double) and never lossy.
using Rational = boost::multiprecision::cpp_rational;

// num/den in canonical form. Throws std::invalid_argument when den is zero.
Rational make_rational(BigInt num, BigInt den);

// Parses "p", "+p", "-p", or "p/q". The sign may appear on the numerator
// only and q must be a positive integer literal. Decimals, exponents and
// whitespace are rejected. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// Same grammar as parse_rational; failure is reported as nullopt.
std::optional<Rational> try_parse_rational(std::string_view text);

// Canonical text form: "p/q", or just "p" when the denominator is 1.
// parse_rational(to_string(x)) == x for every value.
std::string to_string(const Rational& value);

// Nearest double.
double to_double(const Rational& value);

// Exact value of a finite double. Throws std::invalid_argument on NaN
// or infinity.
Rational rational_from_double(double value);

// value^exponent; negative exponents invert. Throws std::domain_error
// for 0 raised to a negative power.
Rational rational_pow(const Rational& value, int exponent);

// Exact square root when value is the square of a rational, otherwise
// nullopt. Negative input yields nullopt.
std::optional<Rational> rational_sqrt(const Rational& value);

// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double value);

}  // namespace boolecert
