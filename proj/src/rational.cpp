#include "boolecert/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace boolecert {

namespace {

// Digits with an optional leading sign; leading zeros are stripped so the
// cpp_int string constructor cannot reinterpret them as an octal prefix.
BigInt parse_integer_field(std::string_view field, std::string_view whole, bool allow_sign) {
  std::string digits;
  std::size_t i = 0;
  if (allow_sign && i < field.size() && (field[i] == '+' || field[i] == '-')) {
    if (field[i] == '-') digits += '-';
    ++i;
  }
  if (i == field.size())
    throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\": missing digits");
  std::size_t first = i;
  while (first + 1 < field.size() && field[first] == '0') ++first;
  for (std::size_t j = i; j < field.size(); ++j)
    if (field[j] < '0' || field[j] > '9')
      throw std::invalid_argument("invalid rational \"" + std::string(whole) + "\"");
  digits.append(field.substr(first));
  return BigInt(digits);
}

}  // namespace

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);  // the backend reduces to lowest terms
}

Rational parse_rational(std::string_view text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer_field(text, text, /*allow_sign=*/true));
  BigInt num = parse_integer_field(text.substr(0, slash), text, /*allow_sign=*/true);
  BigInt den = parse_integer_field(text.substr(slash + 1), text, /*allow_sign=*/false);
  if (den == 0)
    throw std::invalid_argument("invalid rational \"" + std::string(text) + "\": zero denominator");
  return make_rational(std::move(num), std::move(den));
}

std::optional<Rational> try_parse_rational(std::string_view text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

std::string to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rational_from_double(double value) {
  if (!std::isfinite(value))
    throw std::invalid_argument("cannot represent a non-finite double as a rational");
  return Rational(value);  // binary doubles are dyadic rationals, so this is exact
}

Rational rational_pow(const Rational& value, int exponent) {
  if (exponent == 0) return Rational(1);
  if (value == 0 && exponent < 0) throw std::domain_error("zero raised to a negative power");
  const unsigned magnitude =
      exponent < 0 ? static_cast<unsigned>(-(exponent + 1)) + 1u : static_cast<unsigned>(exponent);
  BigInt num = pow(numerator(value), magnitude);
  BigInt den = pow(denominator(value), magnitude);
  // num and den stay coprime under powers; only a negative exponent needs
  // the sign moved back onto the numerator.
  if (exponent < 0) return make_rational(std::move(den), std::move(num));
  return Rational(std::move(num), std::move(den));
}

std::optional<Rational> rational_sqrt(const Rational& value) {
  if (value < 0) return std::nullopt;
  const BigInt num_root = sqrt(numerator(value));
  if (num_root * num_root != numerator(value)) return std::nullopt;
  const BigInt den_root = sqrt(denominator(value));
  if (den_root * den_root != denominator(value)) return std::nullopt;
  return Rational(num_root, den_root);
}

std::string format_double(double value) {
  char buffer[64];
  for (int digits = 15; digits <= 17; ++digits) {
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
    if (std::strtod(buffer, nullptr) == value) break;
  }
  return buffer;
}

}  // namespace boolecert
