#include "boolecert/quadrature.hpp"

namespace boolecert {

std::array<Rational, 5> rule_weights(const RationalInterval& iv) {
  const Rational scale = iv.width() / 90;
  return {7 * scale, 32 * scale, 12 * scale, 32 * scale, 7 * scale};
}

Rational boole_exact(const Polynomial& p, const RationalInterval& iv) {
  static constexpr std::array<int, 5> weights{7, 32, 12, 32, 7};
  const auto nodes = rule_nodes(iv);
  Rational acc(0);
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += weights[i] * p(nodes[i]);
  return acc * iv.width() / 90;
}

Rational integral_exact_poly(const Polynomial& p, const RationalInterval& iv) {
  return p.integral(iv);
}

Rational composite_boole_exact(const Polynomial& p, const RationalInterval& iv, int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  const Rational cell = iv.width() / panels;
  Rational acc(0);
  for (int j = 0; j < panels; ++j)
    acc += boole_exact(p, RationalInterval(iv.a() + j * cell, iv.a() + (j + 1) * cell));
  return acc;
}

double classical_error_bound(double sup_f6, const RealInterval& iv) {
  if (sup_f6 < 0) throw std::invalid_argument("sup_f6 must be nonnegative");
  const double width = iv.width();
  double seventh = 1.0;
  for (int i = 0; i < 7; ++i) seventh *= width;
  return sup_f6 * seventh / 1935360.0;
}

Rational classical_error_bound(const Rational& sup_f6, const RationalInterval& iv) {
  if (sup_f6 < 0) throw std::invalid_argument("sup_f6 must be nonnegative");
  return sup_f6 * rational_pow(iv.width(), 7) / 1935360;
}

int degree_of_exactness() {
  const RationalInterval unit{Rational(0), Rational(1)};
  // First degree the rule gets wrong, minus one; the scan is capped since
  // the rule is known to miss t^6.
  int j = 0;
  while (j <= 10 && boole_exact(Polynomial::monomial(j), unit) ==
                        integral_exact_poly(Polynomial::monomial(j), unit))
    ++j;
  return j - 1;
}

}  // namespace boolecert
