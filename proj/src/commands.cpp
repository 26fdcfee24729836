#include "boolecert/commands.hpp"

#include "boolecert/expression.hpp"
#include "boolecert/monomial_study.hpp"
#include "boolecert/peano_kernel.hpp"
#include "boolecert/quadrature.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace boolecert {

namespace {

struct CheckPrinter {
  std::ostream& out;
  bool all_ok = true;

  void result(const std::string& name, bool ok, const std::string& detail) {
    out << "  " << name << ": " << (ok ? "ok" : "FAIL");
    if (!detail.empty()) out << " (" << detail << ")";
    out << '\n';
    all_ok = all_ok && ok;
  }
};

std::string join_rationals(const auto& values) {
  std::string out;
  for (const Rational& value : values) {
    if (!out.empty()) out += ", ";
    out += to_string(value);
  }
  return out;
}

bool verify_order(int order, const RationalInterval& iv, std::ostream& out) {
  out << "order " << order << '\n';
  CheckPrinter printer{out};

  PiecewiseKernel kernel = closed_form_kernel(order, iv);
  try {
    const PiecewiseKernel solved = solve_kernel_coefficients(order, iv);
    bool agree = true;
    for (std::size_t i = 0; i < 4; ++i)
      agree = agree && solved.segments[i].poly == kernel.segments[i].poly &&
              solved.segments[i].support == kernel.segments[i].support;
    printer.result("solver matches closed form", agree, "4 segments, coefficient-exact");
    printer.result("chain closing residuals", true, "exactly zero");
  } catch (const std::logic_error& e) {
    printer.result("chain closing residuals", false, e.what());
  }

  const Rational integral = kernel_integral(kernel);
  printer.result("integral of K over [a, b]", integral == 0, "value " + to_string(integral));

  // K^(order-1) drops by the node weight across every node, counting K
  // as zero outside [a, b]: value before the node minus value after.
  const auto weights = rule_weights(iv);
  const auto nodes = rule_nodes(iv);
  std::array<Polynomial, 4> jump_level;
  for (std::size_t i = 0; i < 4; ++i)
    jump_level[i] = kernel.segments[i].poly.derivative(order - 1);
  bool drops_ok = true;
  std::array<Rational, 5> drops;
  for (std::size_t i = 0; i < 5; ++i) {
    const Rational before = i == 0 ? Rational(0) : jump_level[i - 1](nodes[i]);
    const Rational after = i == 4 ? Rational(0) : jump_level[i](nodes[i]);
    drops[i] = before - after;
    drops_ok = drops_ok && drops[i] == weights[i];
  }
  printer.result("weight drops of K^(" + std::to_string(order - 1) + ") at the nodes", drops_ok,
                 join_rationals(drops) + "; (b - a) times 7/90, 32/90, 12/90, 32/90, 7/90");

  if (order >= 2) {
    bool smooth = kernel.segments[0].poly(iv.a()) == 0 && kernel.segments[3].poly(iv.b()) == 0;
    for (std::size_t i = 0; i < 3; ++i)
      smooth = smooth && kernel.segments[i].poly(nodes[i + 1]) ==
                             kernel.segments[i + 1].poly(nodes[i + 1]);
    printer.result("K continuous across joins, zero at endpoints", smooth, "");
  }
  if (order == 3) {
    std::array<Polynomial, 4> first;
    for (std::size_t i = 0; i < 4; ++i) first[i] = kernel.segments[i].poly.derivative();
    bool smooth = first[0](iv.a()) == 0 && first[3](iv.b()) == 0;
    for (std::size_t i = 0; i < 3; ++i)
      smooth = smooth && first[i](nodes[i + 1]) == first[i + 1](nodes[i + 1]);
    printer.result("K' continuous across joins, zero at endpoints", smooth, "");
  }

  const auto segment_sups = per_segment_sup_abs(kernel);
  const Rational sup = kernel_sup_abs(kernel);
  const Rational expected_sup = bound_constant(order) * rational_pow(iv.width(), order);
  printer.result(
      "sup |K|", sup == expected_sup,
      to_string(sup) + " = " + to_string(bound_constant(order)) + " * (b - a)^" +
          std::to_string(order) + "; per segment " + join_rationals(segment_sups));

  const int sign = identity_sign(order);
  bool identity_ok = true;
  std::string witness;
  for (int degree = 0; degree <= 10; ++degree) {
    const auto [lhs, rhs] = kernel_identity_check(kernel, Polynomial::monomial(degree));
    if (lhs != sign * rhs) {
      identity_ok = false;
      witness = "t^" + std::to_string(degree) + ": lhs " + to_string(lhs) + ", rhs " +
                to_string(rhs);
      break;
    }
  }
  printer.result("error representation on t^0..t^10", identity_ok,
                 identity_ok ? (sign == 1 ? "integral of K f^(n) = rule - integral"
                                          : "integral of K f^(n) = -(rule - integral)")
                             : witness);
  return printer.all_ok;
}

double parse_endpoint(const std::string& text) {
  if (const auto exact = try_parse_rational(text)) return to_double(*exact);
  double value = 0.0;
  const auto result = std::from_chars(text.data(), text.data() + text.size(), value);
  if (result.ec != std::errc() || result.ptr != text.data() + text.size())
    throw std::invalid_argument("cannot parse endpoint \"" + text + "\"");
  return value;
}

Rational parse_stats_field(const std::string& field, const std::string& whole) {
  if (const auto exact = try_parse_rational(field)) return *exact;
  double value = 0.0;
  const auto result = std::from_chars(field.data(), field.data() + field.size(), value);
  if (result.ec != std::errc() || result.ptr != field.data() + field.size() ||
      !std::isfinite(value))
    throw std::invalid_argument("cannot parse stats entry \"" + whole + "\"");
  return rational_from_double(value);
}

// "order:m:M:I" -> exact-provenance stats; the caller certifies m <= I <= M.
std::pair<int, DerivativeStats> parse_stats_entry(const std::string& text) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    fields.push_back(text.substr(start, colon - start));
    if (colon == std::string::npos) break;
    start = colon + 1;
  }
  if (fields.size() != 4)
    throw std::invalid_argument("stats entry \"" + text + "\" must have the form order:m:M:I");
  int order = 0;
  const auto result =
      std::from_chars(fields[0].data(), fields[0].data() + fields[0].size(), order);
  if (result.ec != std::errc() || result.ptr != fields[0].data() + fields[0].size() ||
      order < 1 || order > 3)
    throw std::invalid_argument("stats entry \"" + text + "\" needs order 1, 2 or 3");
  const Rational m = parse_stats_field(fields[1], text);
  const Rational big_m = parse_stats_field(fields[2], text);
  const Rational i = parse_stats_field(fields[3], text);
  return {order, DerivativeStats::exact(order, i, m, big_m)};
}

std::vector<std::string> split_commas(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const std::string& value : values) {
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = value.find(',', start);
      out.push_back(value.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  return out;
}

}  // namespace

int cmd_verify_kernels(const VerifyKernelsOptions& options, std::ostream& out,
                       std::ostream& err) {
  Rational a;
  Rational b;
  try {
    a = parse_rational(options.a);
    b = parse_rational(options.b);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (!(a < b)) {
    err << "error: verification requires a < b\n";
    return exit_usage;
  }
  if (options.order && (*options.order < 1 || *options.order > 3)) {
    err << "error: order must be 1, 2 or 3\n";
    return exit_usage;
  }

  const RationalInterval iv(a, b);
  out << "rule: (2h/45) (7 f(a) + 32 f(a+h) + 12 f(a+2h) + 32 f(a+3h) + 7 f(b)), h = (b - a)/4\n";
  out << "interval: [" << to_string(a) << ", " << to_string(b) << "]\n";
  bool all_ok = true;
  for (int order = 1; order <= 3; ++order) {
    if (options.order && *options.order != order) continue;
    all_ok = verify_order(order, iv, out) && all_ok;
  }
  out << "result: " << (all_ok ? "all checks passed" : "CHECKS FAILED") << '\n';
  return all_ok ? exit_ok : exit_failure;
}

int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err) {
  Rational b;
  try {
    b = parse_rational(options.b);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (!(b > 0)) {
    err << "error: the study requires b > 0\n";
    return exit_usage;
  }
  if (options.kmax < 6) {
    err << "error: the study requires kmax >= 6\n";
    return exit_usage;
  }
  try {
    const std::vector<StudyRow> rows = study_rows(options.kmax, b);
    const StudyThresholds thresholds = study_thresholds(b);
    if (options.format == TableFormat::csv)
      write_csv(out, rows, thresholds);
    else
      write_markdown(out, rows, thresholds);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  return exit_ok;
}

int cmd_integrate(const IntegrateOptions& options, std::ostream& out, std::ostream& err) {
  ExpressionPtr ast;
  try {
    ast = parse_expression(options.expression);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }

  double a = 0.0;
  double b = 0.0;
  try {
    a = parse_endpoint(options.a);
    b = parse_endpoint(options.b);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  if (!(a < b)) {
    err << "error: integration requires a < b\n";
    return exit_usage;
  }
  if (options.panels < 1) {
    err << "error: panels must be >= 1\n";
    return exit_usage;
  }
  const RealInterval iv(a, b);

  std::map<int, DerivativeStats> stats_by_order;
  for (const std::string& entry : options.stats) {
    try {
      auto [order, stats] = parse_stats_entry(entry);
      if (!stats_by_order.emplace(order, std::move(stats)).second) {
        err << "error: duplicate stats for order " << order << '\n';
        return exit_usage;
      }
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return exit_usage;
    }
  }

  std::vector<EstimateId> selected;
  if (options.estimates.empty()) {
    for (EstimateId id : all_estimates)
      if (stats_by_order.count(estimate_order(id)) > 0) selected.push_back(id);
  } else {
    for (const std::string& name : split_commas(options.estimates)) {
      const auto id = parse_estimate(name);
      if (!id) {
        err << "error: unknown estimate \"" << name << "\"\n";
        return exit_usage;
      }
      if (stats_by_order.count(estimate_order(*id)) == 0) {
        err << "error: estimate " << name << " needs --stats for order "
            << estimate_order(*id) << '\n';
        return exit_usage;
      }
      selected.push_back(*id);
    }
  }

  BoundReport report{iv, 0.0, options.panels, {}, {}, {},
                     stats_by_order.empty() ? ReportProvenance::uncertified
                                            : ReportProvenance::exact};
  try {
    report.value =
        composite_boole([&](double t) { return evaluate(ast, t); }, iv, options.panels);
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
  for (EstimateId id : selected)
    report.bounds[id] = composite_bound_from_global(id, stats_by_order.at(estimate_order(id)),
                                                    iv, options.panels);

  if (options.format == ReportFormat::json)
    render_report_json(report, out);
  else
    render_report_text(report, out);
  return exit_ok;
}

void render_report_text(const BoundReport& report, std::ostream& out) {
  out << "value: " << format_double(report.value) << '\n';
  out << "panels: " << report.panels << '\n';
  out << "interval: [" << format_double(report.interval.a()) << ", "
      << format_double(report.interval.b()) << "]\n";
  out << "provenance: " << to_string(report.provenance) << '\n';
  if (report.classical)
    out << "classical bound: " << format_double(*report.classical) << '\n';
  if (report.true_error) out << "true error: " << format_double(*report.true_error) << '\n';
  if (report.bounds.empty()) {
    out << "note: no derivative statistics supplied; value is uncertified\n";
    return;
  }
  for (const auto& [id, value] : report.bounds)
    out << "bound " << to_string(id) << ": " << format_double(value) << '\n';
  if (report.provenance == ReportProvenance::exact) {
    double best = report.bounds.begin()->second;
    for (const auto& [id, value] : report.bounds) best = std::min(best, value);
    out << "enclosure: [" << format_double(report.value - best) << ", "
        << format_double(report.value + best) << "]\n";
  } else {
    out << "note: heuristic statistics; bounds are not certified\n";
  }
}

void render_report_json(const BoundReport& report, std::ostream& out) {
  nlohmann::json j;
  j["value"] = report.value;
  j["panels"] = report.panels;
  j["interval"] = {{"a", report.interval.a()}, {"b", report.interval.b()}};
  j["bounds"] = nlohmann::json::object();
  for (const auto& [id, value] : report.bounds) j["bounds"][to_string(id)] = value;
  if (report.classical) j["classical"] = *report.classical;
  if (report.true_error) j["true_error"] = *report.true_error;
  j["provenance"] = to_string(report.provenance);
  out << j.dump(2) << '\n';
}

}  // namespace boolecert
