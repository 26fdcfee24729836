#include "boolecert/bounds.hpp"

#include "boolecert/peano_kernel.hpp"

#include <stdexcept>

namespace boolecert {

namespace {

std::size_t estimate_index(EstimateId id) { return static_cast<std::size_t>(id); }

constexpr std::array<std::string_view, 6> estimate_names{"t1m", "t1M", "t2m",
                                                         "t2M", "t3m", "t3M"};

// Exact interval width of a double interval; endpoints embed exactly.
Rational exact_width(const RealInterval& iv) {
  return rational_from_double(iv.b()) - rational_from_double(iv.a());
}

Rational bound_from_width(EstimateId id, const DerivativeStats& stats, const Rational& width) {
  const int order = estimate_order(id);
  if (stats.order() != order)
    throw std::invalid_argument("stats of order " + std::to_string(stats.order()) +
                                " cannot feed estimate " + to_string(id));
  const Rational delta = uses_lower_bound(id) ? stats.i_value() - stats.m_value()
                                              : stats.big_m_value() - stats.i_value();
  if (delta < 0)
    throw std::domain_error("estimate " + to_string(id) +
                            " has negative delta; statistics are inconsistent");
  return bound_constant(order) * delta * rational_pow(width, order + 1);
}

Rational falling_product(int k, int factors) {
  Rational out(1);
  for (int i = 0; i < factors; ++i) out *= k - i;
  return out;
}

}  // namespace

int estimate_order(EstimateId id) { return static_cast<int>(estimate_index(id)) / 2 + 1; }

bool uses_lower_bound(EstimateId id) { return estimate_index(id) % 2 == 0; }

std::string to_string(EstimateId id) { return std::string(estimate_names[estimate_index(id)]); }

std::optional<EstimateId> parse_estimate(std::string_view text) {
  for (EstimateId id : all_estimates)
    if (estimate_names[estimate_index(id)] == text) return id;
  return std::nullopt;
}

DerivativeStats::DerivativeStats(int order, Rational i_value, Rational m_value,
                                 Rational big_m_value, StatsProvenance provenance)
    : order_(order),
      i_(std::move(i_value)),
      m_(std::move(m_value)),
      big_m_(std::move(big_m_value)),
      provenance_(provenance) {
  if (order_ < 1 || order_ > 3) throw std::invalid_argument("stats order must be 1, 2 or 3");
  if (m_ > big_m_)
    throw std::invalid_argument("derivative statistics require m_value <= big_m_value");
}

DerivativeStats DerivativeStats::exact(int order, Rational i_value, Rational m_value,
                                       Rational big_m_value) {
  DerivativeStats stats(order, std::move(i_value), std::move(m_value), std::move(big_m_value),
                        StatsProvenance::exact);
  if (stats.m_ > stats.i_ || stats.i_ > stats.big_m_)
    throw std::invalid_argument(
        "exact derivative statistics require m_value <= i_value <= big_m_value");
  return stats;
}

DerivativeStats DerivativeStats::sampled(int order, Rational i_value, Rational m_value,
                                         Rational big_m_value) {
  // No sandwich check: grid extrema only bound inward, so i_value may
  // legitimately fall outside [m_value, big_m_value].
  return DerivativeStats(order, std::move(i_value), std::move(m_value), std::move(big_m_value),
                         StatsProvenance::sampled);
}

const Rational& bound_constant(int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("bound order must be 1, 2 or 3");
  static const std::array<Rational, 3> constants = [] {
    const RationalInterval unit{Rational(0), Rational(1)};
    std::array<Rational, 3> out;
    for (int n = 1; n <= 3; ++n) out[static_cast<std::size_t>(n - 1)] =
        kernel_sup_abs(closed_form_kernel(n, unit));
    return out;
  }();
  return constants[static_cast<std::size_t>(order - 1)];
}

Rational bound_exact(EstimateId id, const DerivativeStats& stats, const RationalInterval& iv) {
  return bound_from_width(id, stats, iv.width());
}

double bound(EstimateId id, const DerivativeStats& stats, const RealInterval& iv) {
  return to_double(bound_from_width(id, stats, exact_width(iv)));
}

DerivativeStats monomial_stats(int k, const Rational& b, int order) {
  if (order < 1 || order > 3) throw std::invalid_argument("stats order must be 1, 2 or 3");
  if (k < order)
    throw std::invalid_argument("monomial stats need k >= order; got k = " + std::to_string(k));
  if (!(b > 0)) throw std::invalid_argument("monomial stats need b > 0");
  const Rational power = rational_pow(b, k - order);
  const Rational i_value = falling_product(k, order - 1) * power;
  const Rational big_m = falling_product(k, order) * power;
  const Rational m = k == order ? big_m : Rational(0);
  return DerivativeStats::exact(order, i_value, m, big_m);
}

MonomialBoundValue monomial_bound_value(EstimateId id, int k, const Rational& b) {
  const int order = estimate_order(id);
  const Rational theorem = bound_from_width(id, monomial_stats(k, b, order), b);
  return MonomialBoundValue{order == 1 ? 10 * theorem : theorem, theorem};
}

Rational classical_monomial_bound(int k, const Rational& b) {
  if (k < 0) throw std::invalid_argument("classical monomial bound needs k >= 0");
  if (k <= 5) return Rational(0);
  return falling_product(k, 6) * rational_pow(b, k + 1) / 1935360;
}

int crossover_threshold(EstimateId id, const Rational& b, BoundReading reading) {
  int run = 0;
  for (int k = 6; k <= 200; ++k) {
    const MonomialBoundValue value = monomial_bound_value(id, k, b);
    const Rational& chosen =
        reading == BoundReading::table ? value.table_value : value.theorem_value;
    if (chosen < classical_monomial_bound(k, b)) {
      if (++run == 3) return k - 2;
    } else {
      run = 0;
    }
  }
  throw std::runtime_error("estimate " + to_string(id) +
                           " never beats the classical bound for three consecutive k <= 200");
}

Rational composite_bound_exact(EstimateId id, std::span<const DerivativeStats> panel_stats,
                               const RationalInterval& iv, int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  if (panel_stats.size() != static_cast<std::size_t>(panels))
    throw std::invalid_argument("need exactly one stats entry per panel");
  const Rational cell = iv.width() / panels;
  Rational acc(0);
  for (const DerivativeStats& stats : panel_stats) acc += bound_from_width(id, stats, cell);
  return acc;
}

double composite_bound(EstimateId id, std::span<const DerivativeStats> panel_stats,
                       const RealInterval& iv, int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  if (panel_stats.size() != static_cast<std::size_t>(panels))
    throw std::invalid_argument("need exactly one stats entry per panel");
  const Rational cell = exact_width(iv) / panels;
  Rational acc(0);
  for (const DerivativeStats& stats : panel_stats) acc += bound_from_width(id, stats, cell);
  return to_double(acc);
}

Rational composite_bound_from_global(EstimateId id, const DerivativeStats& stats,
                                     const RationalInterval& iv, int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  return bound_from_width(id, stats, iv.width()) /
         rational_pow(Rational(panels), estimate_order(id));
}

double composite_bound_from_global(EstimateId id, const DerivativeStats& stats,
                                   const RealInterval& iv, int panels) {
  if (panels < 1) throw std::invalid_argument("panels must be >= 1");
  return to_double(bound_from_width(id, stats, exact_width(iv)) /
                   rational_pow(Rational(panels), estimate_order(id)));
}

std::string to_string(ReportProvenance provenance) {
  switch (provenance) {
    case ReportProvenance::exact:
      return "exact";
    case ReportProvenance::sampled:
      return "sampled";
    default:
      return "uncertified";
  }
}

}  // namespace boolecert
