#pragma once

#include "boolecert/interval.hpp"
#include "boolecert/polynomial.hpp"
#include "boolecert/rational.hpp"

#include <array>
#include <cmath>
#include <concepts>
#include <functional>
#include <stdexcept>
#include <string>

namespace boolecert {

template <typename F>
concept RealFunction =
    std::invocable<F&, double> && std::convertible_to<std::invoke_result_t<F&, double>, double>;

// Thrown when an integrand produces NaN or infinity; carries the abscissa.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& message, double at)
      : std::runtime_error(message), at_(at) {}
  double at() const { return at_; }

 private:
  double at_;
};

// Node weights 7, 32, 12, 32, 7 scaled by (b - a)/90, summing to b - a.
std::array<Rational, 5> rule_weights(const RationalInterval& iv);

// Five-point closed rule on [a, b]:
//   (2h/45) (7 f(a) + 32 f(a+h) + 12 f(a+2h) + 32 f(a+3h) + 7 f(b)),
// h = (b - a)/4. Nodes are evaluated left to right into a single
// accumulator; no compensated summation.
template <RealFunction F>
double boole(F&& f, const RealInterval& iv) {
  static constexpr std::array<double, 5> weights{7.0, 32.0, 12.0, 32.0, 7.0};
  const auto nodes = rule_nodes(iv);
  double acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const double y = std::invoke(f, nodes[i]);
    if (!std::isfinite(y))
      throw EvaluationError("integrand is not finite at node " + std::to_string(i) +
                                " (t = " + format_double(nodes[i]) + ")",
                            nodes[i]);
    acc += weights[i] * y;
  }
  return acc * (iv.width() / 90.0);  // 2h/45 with h = (b - a)/4
}

// The same rule in exact arithmetic on a polynomial integrand.
Rational boole_exact(const Polynomial& p, const RationalInterval& iv);

// Exact integral, the reference the rule is measured against.
Rational integral_exact_poly(const Polynomial& p, const RationalInterval& iv);

// Applies the rule on `panels` equal-width cells; the final cell ends at
// b exactly and panels = 1 reproduces boole bit for bit.
template <RealFunction F>
double composite_boole(F&& f, const RealInterval& iv, int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  if (panels == 1) return boole(f, iv);
  const double cell = iv.width() / panels;
  double acc = 0.0;
  for (int j = 0; j < panels; ++j) {
    const double left = iv.a() + j * cell;
    const double right = j + 1 == panels ? iv.b() : iv.a() + (j + 1) * cell;
    acc += boole(f, RealInterval(left, right));
  }
  return acc;
}

Rational composite_boole_exact(const Polynomial& p, const RationalInterval& iv, int panels);

// sup|f^(6)| * (b - a)^7 / 1935360, i.e. (8/945) h^7 sup|f^(6)| with
// h = (b - a)/4. Throws std::invalid_argument for negative sup_f6.
double classical_error_bound(double sup_f6, const RealInterval& iv);
Rational classical_error_bound(const Rational& sup_f6, const RationalInterval& iv);

// Largest d with boole_exact(t^j, [0,1]) = integral_exact_poly(t^j, [0,1])
// for all j <= d, determined by exact scan; returns 5.
int degree_of_exactness();

}  // namespace boolecert
