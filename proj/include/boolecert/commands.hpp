#pragma once

#include "boolecert/bounds.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace boolecert {

// Shared process exit codes: success, failed checks or failed
// evaluation, unusable arguments.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_usage = 2;

enum class TableFormat { csv, markdown };
enum class ReportFormat { text, json };

// Prints an exact verification certificate for the error kernels on
// [a, b]: solver/closed-form agreement, zero integral, weight drops,
// continuity, sup values, and the error representation on t^0..t^10.
// Endpoints are exact rational text; decimals are rejected.
struct VerifyKernelsOptions {
  std::string a = "0";
  std::string b = "1";
  std::optional<int> order;  // 1, 2 or 3; all three when unset
};
int cmd_verify_kernels(const VerifyKernelsOptions& options, std::ostream& out,
                       std::ostream& err);

// Emits the monomial comparison table for t^k on [0, b], k = 6..kmax,
// with crossover thresholds in the footer.
struct TableOptions {
  int kmax = 30;
  std::string b = "1";
  TableFormat format = TableFormat::csv;
};
int cmd_table(const TableOptions& options, std::ostream& out, std::ostream& err);

// Integrates an expression in t with the composite five-point rule and,
// when derivative statistics are supplied, prints certified bounds and
// the enclosure they imply. Stats entries are "order:m:M:I" with m/M
// the essential bounds of the order-th derivative and I the mean slope
// of the derivative one below.
struct IntegrateOptions {
  std::string expression;
  std::string a = "0";
  std::string b = "1";
  int panels = 1;
  std::vector<std::string> stats;
  std::vector<std::string> estimates;  // subset of t1m,t1M,t2m,t2M,t3m,t3M
  ReportFormat format = ReportFormat::text;
};
int cmd_integrate(const IntegrateOptions& options, std::ostream& out, std::ostream& err);

void render_report_text(const BoundReport& report, std::ostream& out);
void render_report_json(const BoundReport& report, std::ostream& out);

}  // namespace boolecert
