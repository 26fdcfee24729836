#pragma once

#include "boolecert/interval.hpp"
#include "boolecert/rational.hpp"

#include <initializer_list>
#include <vector>

namespace boolecert {

// Dense univariate polynomial with exact rational coefficients, stored
// constant term first. Trailing zeros are stripped on construction, so
// the leading coefficient is nonzero unless the polynomial is zero
// (empty coefficient vector, degree -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(Rational value);
  // scale * t^degree
  static Polynomial monomial(int degree, Rational scale = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of t^index; zero beyond the stored degree.
  Rational coefficient(int index) const;

  Rational operator()(const Rational& t) const;
  double operator()(double t) const;

  Polynomial derivative() const;
  Polynomial derivative(int n) const;
  // Antiderivative with zero constant term.
  Polynomial antiderivative() const;
  // Exact integral over the interval.
  Rational integral(const RationalInterval& iv) const;

  // p(c0 + c1 * t).
  Polynomial compose_affine(const Rational& c0, const Rational& c1) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Polynomial& p, const Rational& scale);
  friend Polynomial operator*(const Rational& scale, const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) = default;

 private:
  std::vector<Rational> coeffs_;
};

}  // namespace boolecert
