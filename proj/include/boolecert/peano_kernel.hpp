#pragma once

#include "boolecert/interval.hpp"
#include "boolecert/polynomial.hpp"

#include <array>
#include <utility>
#include <vector>

namespace boolecert {

// One polynomial piece of a kernel. The polynomial is meaningful on the
// closed support; at an interior join its value at the shared endpoint
// is the one-sided limit from this piece's side.
struct KernelSegment {
  Polynomial poly;
  RationalInterval support;
};

// Error-representer kernel of the five-point rule for derivative order
// 1, 2 or 3: four pieces of degree = order with leading coefficient
// 1/order!, joined at (3a+b)/4, (a+b)/2, (a+3b)/4, identically zero
// outside [a, b]. For a polynomial f,
//   integral of K * f^(order) = identity_sign(order) * (rule(f) - integral(f)).
struct PiecewiseKernel {
  int order;
  RationalInterval interval;
  std::array<KernelSegment, 4> segments;
};

// The three interior join points.
std::array<Rational, 3> interior_nodes(const RationalInterval& iv);

// Builds the order-n kernel by forward substitution, one coefficient
// chain per derivative level: the level n-1 chain makes K^(n-1) jump by
// minus the node weight across each of the five nodes (K is zero
// outside [a, b]), and every lower level makes that derivative vanish
// at a and stay continuous across the joins. Each chain has five
// equations for four unknowns; the fifth (at b) is not used for
// solving and must close to exactly zero, else std::logic_error.
PiecewiseKernel solve_kernel_coefficients(int order, const RationalInterval& iv);

// The same kernel assembled from its closed-form coefficients. Equal to
// solve_kernel_coefficients output coefficient by coefficient.
PiecewiseKernel closed_form_kernel(int order, const RationalInterval& iv);

// Exact integral over [a, b]; zero for every kernel.
Rational kernel_integral(const PiecewiseKernel& kernel);

// Stationary points of the piece lying within its closed support,
// ascending. Linear pieces have none. Throws std::domain_error if a
// stationary point is irrational (never the case for these kernels).
std::vector<Rational> critical_points(const KernelSegment& segment);

// sup of |poly| over the closed support: the maximum over both support
// endpoints (covering one-sided limits at jumps) and interior
// stationary points.
Rational segment_sup_abs(const KernelSegment& segment);

std::array<Rational, 4> per_segment_sup_abs(const PiecewiseKernel& kernel);

// sup of |K| over [a, b]; equals the [0,1] constant times width^order.
Rational kernel_sup_abs(const PiecewiseKernel& kernel);

// Both sides of the error representation for a polynomial integrand:
// lhs = integral of K * p^(order) (segment-wise exact), rhs = rule
// value minus exact integral. lhs == identity_sign(order) * rhs.
std::pair<Rational, Rational> kernel_identity_check(const PiecewiseKernel& kernel,
                                                    const Polynomial& p);

// +1 for odd orders, -1 for order 2: integrating K * f^(order) by parts
// peels order - 1 sign flips off the defining conditions.
int identity_sign(int order);

}  // namespace boolecert
