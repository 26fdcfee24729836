#include "boolecert/polynomial.hpp"

#include <stdexcept>

namespace boolecert {

namespace {

void strip_trailing_zeros(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  strip_trailing_zeros(coeffs_);
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(Rational value) { return Polynomial({std::move(value)}); }

Polynomial Polynomial::monomial(int degree, Rational scale) {
  if (degree < 0) throw std::invalid_argument("monomial degree must be nonnegative");
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1, Rational(0));
  coeffs.back() = std::move(scale);
  return Polynomial(std::move(coeffs));
}

Rational Polynomial::coefficient(int index) const {
  if (index < 0) throw std::out_of_range("coefficient index must be nonnegative");
  if (index > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(index)];
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

double Polynomial::operator()(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + to_double(*it);
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<int>(i);
  return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative(int n) const {
  if (n < 0) throw std::invalid_argument("derivative order must be nonnegative");
  Polynomial out = *this;
  for (int i = 0; i < n; ++i) out = out.derivative();
  return out;
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return Polynomial();
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[i + 1] = coeffs_[i] / static_cast<int>(i + 1);
  return Polynomial(std::move(out));
}

Rational Polynomial::integral(const RationalInterval& iv) const {
  const Polynomial anti = antiderivative();
  return anti(iv.b()) - anti(iv.a());
}

Polynomial Polynomial::compose_affine(const Rational& c0, const Rational& c1) const {
  const Polynomial argument{c0, c1};
  Polynomial acc;
  for (int i = degree(); i >= 0; --i) acc = acc * argument + Polynomial::constant(coefficient(i));
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = -coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& lhs, const Polynomial& rhs) {
  std::vector<Rational> out(std::max(lhs.coeffs_.size(), rhs.coeffs_.size()), Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) out[i] += lhs.coeffs_[i];
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out[i] += rhs.coeffs_[i];
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& lhs, const Polynomial& rhs) { return lhs + (-rhs); }

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Polynomial();
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& p, const Rational& scale) {
  std::vector<Rational> out(p.coeffs_.size());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) out[i] = p.coeffs_[i] * scale;
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& scale, const Polynomial& p) { return p * scale; }

}  // namespace boolecert
