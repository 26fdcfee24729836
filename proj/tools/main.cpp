#include "boolecert/commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>

int main(int argc, char** argv) {
  CLI::App app{"Five-point Newton-Cotes rule with exact kernel verification and certified "
               "error bounds"};
  app.require_subcommand(1);

  boolecert::VerifyKernelsOptions verify_options;
  int verify_order_flag = 0;
  CLI::App* verify = app.add_subcommand(
      "verify-kernels", "Print an exact verification certificate for the error kernels");
  verify->add_option("--a", verify_options.a, "Left endpoint, exact rational text (default 0)");
  verify->add_option("--b", verify_options.b, "Right endpoint, exact rational text (default 1)");
  verify->add_option("--order", verify_order_flag, "Restrict to one kernel order (1, 2 or 3)");

  boolecert::TableOptions table_options;
  std::string table_format = "csv";
  CLI::App* table = app.add_subcommand(
      "table", "Emit the monomial comparison table for t^k on [0, b], k = 6..kmax");
  table->add_option("--kmax", table_options.kmax, "Largest monomial degree (default 30)");
  table->add_option("--b", table_options.b, "Right endpoint, exact rational text (default 1)");
  table->add_option("--format", table_format, "Output format: csv or markdown (default csv)")
      ->check(CLI::IsMember({"csv", "markdown"}));

  boolecert::IntegrateOptions integrate_options;
  std::string integrate_format = "text";
  CLI::App* integrate = app.add_subcommand(
      "integrate", "Integrate an expression in t with the composite five-point rule");
  integrate->add_option("--expr", integrate_options.expression, "Integrand, e.g. \"exp(t)\"")
      ->required();
  integrate->add_option("--a", integrate_options.a, "Left endpoint (rational or decimal)");
  integrate->add_option("--b", integrate_options.b, "Right endpoint (rational or decimal)");
  integrate->add_option("--panels", integrate_options.panels,
                        "Number of equal-width panels (default 1)");
  integrate->add_option("--stats", integrate_options.stats,
                        "Derivative statistics order:m:M:I (repeatable; m/M bound the order-th "
                        "derivative, I is the mean slope of the one below)");
  integrate
      ->add_option("--estimates", integrate_options.estimates,
                   "Comma list of bounds to evaluate: t1m,t1M,t2m,t2M,t3m,t3M "
                   "(default: all with stats)")
      ->delimiter(',');
  integrate->add_option("--format", integrate_format, "Output format: text or json (default text)")
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return boolecert::exit_usage;
  }

  if (verify->parsed()) {
    if (verify->count("--order") > 0) verify_options.order = verify_order_flag;
    return boolecert::cmd_verify_kernels(verify_options, std::cout, std::cerr);
  }
  if (table->parsed()) {
    table_options.format = table_format == "markdown" ? boolecert::TableFormat::markdown
                                                      : boolecert::TableFormat::csv;
    return boolecert::cmd_table(table_options, std::cout, std::cerr);
  }
  integrate_options.format = integrate_format == "json" ? boolecert::ReportFormat::json
                                                        : boolecert::ReportFormat::text;
  return boolecert::cmd_integrate(integrate_options, std::cout, std::cerr);
}
