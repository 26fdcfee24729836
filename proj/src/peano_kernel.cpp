#include "boolecert/peano_kernel.hpp"

#include "boolecert/quadrature.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace boolecert {

namespace {

void require_order(int order) {
  if (order < 1 || order > 3)
    throw std::invalid_argument("kernel order must be 1, 2 or 3, got " + std::to_string(order));
}

Rational factorial(int n) {
  Rational out(1);
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

PiecewiseKernel assemble(int order, const RationalInterval& iv,
                         const std::array<std::vector<Rational>, 4>& coeffs) {
  const auto xs = rule_nodes(iv);
  return PiecewiseKernel{
      order,
      iv,
      {KernelSegment{Polynomial(coeffs[0]), RationalInterval(xs[0], xs[1])},
       KernelSegment{Polynomial(coeffs[1]), RationalInterval(xs[1], xs[2])},
       KernelSegment{Polynomial(coeffs[2]), RationalInterval(xs[2], xs[3])},
       KernelSegment{Polynomial(coeffs[3]), RationalInterval(xs[3], xs[4])}}};
}

}  // namespace

std::array<Rational, 3> interior_nodes(const RationalInterval& iv) {
  const auto xs = rule_nodes(iv);
  return {xs[1], xs[2], xs[3]};
}

PiecewiseKernel solve_kernel_coefficients(int order, const RationalInterval& iv) {
  require_order(order);
  const auto xs = rule_nodes(iv);
  const auto ws = rule_weights(iv);

  std::array<std::vector<Rational>, 4> coeffs;
  for (auto& c : coeffs) {
    c.assign(static_cast<std::size_t>(order) + 1, Rational(0));
    c.back() = 1 / factorial(order);
  }
  // Level `level` determines the constant terms of the level-th
  // derivatives, i.e. coeffs[i][level]; all higher coefficients are
  // known, so evaluating with coeffs[i][level] still zero gives the
  // fixed part of each equation.
  const auto derivative_at = [&coeffs](int piece, int level, const Rational& t) {
    return Polynomial(coeffs[static_cast<std::size_t>(piece)]).derivative(level)(t);
  };
  for (int level = order - 1; level >= 0; --level) {
    const bool weight_chain = level == order - 1;
    const Rational level_factorial = factorial(level);
    Rational target = weight_chain ? -ws[0] : Rational(0);
    coeffs[0][static_cast<std::size_t>(level)] = (target - derivative_at(0, level, xs[0])) / level_factorial;
    for (int piece = 1; piece < 4; ++piece) {
      target = derivative_at(piece - 1, level, xs[static_cast<std::size_t>(piece)]) -
               (weight_chain ? ws[static_cast<std::size_t>(piece)] : Rational(0));
      coeffs[static_cast<std::size_t>(piece)][static_cast<std::size_t>(level)] =
          (target - derivative_at(piece, level, xs[static_cast<std::size_t>(piece)])) / level_factorial;
    }
    const Rational residual =
        derivative_at(3, level, xs[4]) - (weight_chain ? ws[4] : Rational(0));
    if (residual != 0)
      throw std::logic_error("kernel chain at derivative level " + std::to_string(level) +
                             " has nonzero closing residual " + to_string(residual));
  }
  return assemble(order, iv, coeffs);
}

PiecewiseKernel closed_form_kernel(int order, const RationalInterval& iv) {
  require_order(order);
  const Rational& a = iv.a();
  const Rational& b = iv.b();
  const std::array<Rational, 4> beta{-(83 * a + 7 * b) / 90, -(17 * a + 13 * b) / 30,
                                     -(13 * a + 17 * b) / 30, -(7 * a + 83 * b) / 90};
  const std::array<Rational, 4> gamma{19 * a * a / 45 + 7 * a * b / 90,
                                      7 * a * a / 45 + 23 * a * b / 90 + 4 * b * b / 45,
                                      (a + 2 * b) * (8 * a + 7 * b) / 90,
                                      b * (7 * a + 38 * b) / 90};
  const std::array<Rational, 4> delta{
      -a * a * (23 * a + 7 * b) / 180,
      -(a * a * a / 36 + 13 * a * a * b / 180 + a * b * b / 18 + b * b * b / 90),
      -(a * a * a / 90 + a * a * b / 18 + 13 * a * b * b / 180 + b * b * b / 36),
      -b * b * (7 * a + 23 * b) / 180};

  std::array<std::vector<Rational>, 4> coeffs;
  for (std::size_t i = 0; i < 4; ++i) {
    switch (order) {
      case 1:
        coeffs[i] = {beta[i], Rational(1)};
        break;
      case 2:
        coeffs[i] = {gamma[i], beta[i], Rational(1, 2)};
        break;
      default:
        coeffs[i] = {delta[i], gamma[i], beta[i] / 2, Rational(1, 6)};
        break;
    }
  }
  return assemble(order, iv, coeffs);
}

Rational kernel_integral(const PiecewiseKernel& kernel) {
  Rational acc(0);
  for (const auto& segment : kernel.segments) acc += segment.poly.integral(segment.support);
  return acc;
}

std::vector<Rational> critical_points(const KernelSegment& segment) {
  const Polynomial d = segment.poly.derivative();
  std::vector<Rational> roots;
  switch (d.degree()) {
    case -1:
    case 0:
      break;  // constant derivative: no isolated stationary points
    case 1:
      roots.push_back(-d.coefficient(0) / d.coefficient(1));
      break;
    case 2: {
      const Rational c2 = d.coefficient(2);
      const Rational c1 = d.coefficient(1);
      const Rational c0 = d.coefficient(0);
      const Rational discriminant = c1 * c1 - 4 * c2 * c0;
      if (discriminant < 0) break;
      const auto root = rational_sqrt(discriminant);
      if (!root)
        throw std::domain_error("stationary point of segment polynomial is irrational");
      roots.push_back((-c1 - *root) / (2 * c2));
      if (*root != 0) roots.push_back((-c1 + *root) / (2 * c2));
      break;
    }
    default:
      throw std::logic_error("kernel segment polynomial of unexpected degree");
  }
  std::vector<Rational> in_support;
  for (const Rational& r : roots)
    if (segment.support.a() <= r && r <= segment.support.b()) in_support.push_back(r);
  std::sort(in_support.begin(), in_support.end());
  return in_support;
}

Rational segment_sup_abs(const KernelSegment& segment) {
  Rational best = abs(segment.poly(segment.support.a()));
  const Rational at_b = abs(segment.poly(segment.support.b()));
  if (at_b > best) best = at_b;
  for (const Rational& t : critical_points(segment)) {
    const Rational value = abs(segment.poly(t));
    if (value > best) best = value;
  }
  return best;
}

std::array<Rational, 4> per_segment_sup_abs(const PiecewiseKernel& kernel) {
  std::array<Rational, 4> out;
  for (std::size_t i = 0; i < 4; ++i) out[i] = segment_sup_abs(kernel.segments[i]);
  return out;
}

Rational kernel_sup_abs(const PiecewiseKernel& kernel) {
  const auto per_segment = per_segment_sup_abs(kernel);
  return *std::max_element(per_segment.begin(), per_segment.end());
}

std::pair<Rational, Rational> kernel_identity_check(const PiecewiseKernel& kernel,
                                                    const Polynomial& p) {
  const Polynomial dp = p.derivative(kernel.order);
  Rational lhs(0);
  for (const auto& segment : kernel.segments)
    lhs += integral_exact_poly(segment.poly * dp, segment.support);
  const Rational rhs =
      boole_exact(p, kernel.interval) - integral_exact_poly(p, kernel.interval);
  return {lhs, rhs};
}

int identity_sign(int order) {
  require_order(order);
  return order % 2 == 0 ? -1 : 1;
}

}  // namespace boolecert
