#pragma once

#include "boolecert/interval.hpp"
#include "boolecert/quadrature.hpp"
#include "boolecert/rational.hpp"

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace boolecert {

// The six certified estimates: derivative order 1..3, each in a lower
// (m) and an upper (M) variant according to which side of the
// derivative sandwich enters the bound.
enum class EstimateId { t1m, t1M, t2m, t2M, t3m, t3M };

inline constexpr std::array<EstimateId, 6> all_estimates{EstimateId::t1m, EstimateId::t1M,
                                                         EstimateId::t2m, EstimateId::t2M,
                                                         EstimateId::t3m, EstimateId::t3M};

int estimate_order(EstimateId id);
// True for the m variants (delta = i_value - m_value).
bool uses_lower_bound(EstimateId id);
std::string to_string(EstimateId id);
std::optional<EstimateId> parse_estimate(std::string_view text);

enum class StatsProvenance { exact, sampled };

// Statistics of the derivatives of an integrand f on [a, b] for one
// order n: i_value is the mean slope of f^(n-1),
//   (f^(n-1)(b) - f^(n-1)(a)) / (b - a),
// and m_value / big_m_value are essential bounds of f^(n) (almost
// everywhere lower and upper). exact() enforces m <= i <= M; sampled()
// holds grid estimates, which only bound inward, so the report is
// marked and never certified.
class DerivativeStats {
 public:
  static DerivativeStats exact(int order, Rational i_value, Rational m_value,
                               Rational big_m_value);
  static DerivativeStats sampled(int order, Rational i_value, Rational m_value,
                                 Rational big_m_value);

  int order() const { return order_; }
  const Rational& i_value() const { return i_; }
  const Rational& m_value() const { return m_; }
  const Rational& big_m_value() const { return big_m_; }
  StatsProvenance provenance() const { return provenance_; }

 private:
  DerivativeStats(int order, Rational i_value, Rational m_value, Rational big_m_value,
                  StatsProvenance provenance);

  int order_;
  Rational i_;
  Rational m_;
  Rational big_m_;
  StatsProvenance provenance_;
};

// sup of |kernel| on [0, 1] for the given order: 11/60, 17/1440,
// 1/1620. Read from kernel_sup_abs of closed_form_kernel once and
// cached; the bounds below own no copy of these constants.
const Rational& bound_constant(int order);

// bound_constant(order) * delta * width^(order + 1), with delta =
// i_value - m_value for m variants and big_m_value - i_value for M
// variants. Throws std::invalid_argument on an order mismatch and
// std::domain_error when delta < 0.
Rational bound_exact(EstimateId id, const DerivativeStats& stats, const RationalInterval& iv);
double bound(EstimateId id, const DerivativeStats& stats, const RealInterval& iv);

// Exact stats of t^k on [0, b]: i_value = k(k-1)...(k-order+2) b^(k-order),
// big_m_value = k(k-1)...(k-order+1) b^(k-order), m_value = k! when
// k == order (constant derivative) and 0 otherwise. Requires k >= order
// and b > 0.
DerivativeStats monomial_stats(int k, const Rational& b, int order);

// The same estimate under the two published readings. They coincide for
// orders 2 and 3; for order 1 the table reading is exactly 10 times the
// theorem reading.
struct MonomialBoundValue {
  Rational table_value;
  Rational theorem_value;
};
MonomialBoundValue monomial_bound_value(EstimateId id, int k, const Rational& b);

// k(k-1)(k-2)(k-3)(k-4)(k-5) b^(k+1) / 1935360; zero for k <= 5.
Rational classical_monomial_bound(int k, const Rational& b);

enum class BoundReading { table, theorem };

// Smallest k >= 6 whose estimate for t^k on [0, b] is below the
// classical bound for three consecutive degrees (the comparison is
// eventually monotone; the run requirement stands in for a proof).
// Scans to k = 200; throws std::runtime_error when no run is found.
int crossover_threshold(EstimateId id, const Rational& b, BoundReading reading);

// Sum of per-panel bounds over an equal-width partition; panel_stats
// holds one entry per panel, each valid on its own panel.
Rational composite_bound_exact(EstimateId id, std::span<const DerivativeStats> panel_stats,
                               const RationalInterval& iv, int panels);
double composite_bound(EstimateId id, std::span<const DerivativeStats> panel_stats,
                       const RealInterval& iv, int panels);

// Composite bound from whole-interval stats: per-panel mean slopes
// telescope to panels * i_value and the global essential bounds hold on
// every panel, so the per-panel sum is at most the single-application
// bound divided by panels^order. Equals bound_exact at panels = 1.
Rational composite_bound_from_global(EstimateId id, const DerivativeStats& stats,
                                     const RationalInterval& iv, int panels);
double composite_bound_from_global(EstimateId id, const DerivativeStats& stats,
                                   const RealInterval& iv, int panels);

// Grid min/max of g (the order-th derivative) over grid_points
// uniformly spaced samples including both endpoints. i_value must be
// supplied by the caller: it involves the order-(n-1) derivative at the
// endpoints, which samples of g cannot produce. Provenance is sampled.
template <RealFunction G>
DerivativeStats stats_from_samples(G&& g, int order, const RealInterval& iv, int grid_points,
                                   double i_value) {
  if (grid_points < 2) throw std::invalid_argument("grid_points must be >= 2");
  double lo = 0.0;
  double hi = 0.0;
  for (int j = 0; j < grid_points; ++j) {
    const double t =
        j + 1 == grid_points ? iv.b() : iv.a() + j * iv.width() / (grid_points - 1);
    const double y = std::invoke(g, t);
    if (!std::isfinite(y))
      throw EvaluationError("derivative sample is not finite (t = " + format_double(t) + ")", t);
    lo = j == 0 ? y : std::min(lo, y);
    hi = j == 0 ? y : std::max(hi, y);
  }
  return DerivativeStats::sampled(order, rational_from_double(i_value),
                                  rational_from_double(lo), rational_from_double(hi));
}

enum class ReportProvenance { exact, sampled, uncertified };
std::string to_string(ReportProvenance provenance);

// Result of one integration run: the rule value plus whichever bounds
// the available statistics support. When true_error is known and the
// stats are exact, every present bound is >= true_error.
struct BoundReport {
  RealInterval interval;
  double value = 0.0;
  int panels = 1;
  std::map<EstimateId, double> bounds;
  std::optional<double> classical;
  std::optional<double> true_error;
  ReportProvenance provenance = ReportProvenance::uncertified;
};

}  // namespace boolecert
