// Command-line front end: evaluate formulas, print the comparison table, run
// the verification suite, estimate the x^-9 rate constant, print constants.
//
// Exit codes: 0 success, 1 verification or computation failure, 2 usage error.
// Errors are reported on stderr as a single `error: kind=<kind> message="..."`.

#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wgamma/formulas.hpp"
#include "wgamma/harness.hpp"
#include "wgamma/oracle.hpp"
#include "wgamma/verifier.hpp"

namespace {

using namespace wgamma;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void report_error(const std::string& kind, const std::string& message) {
  std::string escaped;
  for (char c : message) {
    if (c == '"' || c == '\\') escaped += '\\';
    escaped += (c == '\n' ? ' ' : c);
  }
  std::cerr << "error: kind=" << kind << " message=\"" << escaped << "\"\n";
}

FormulaId formula_or_throw(const std::string& name) {
  const auto id = parse_formula(name);
  if (!id) throw UsageError("unknown formula '" + name + "'");
  return *id;
}

std::vector<Real> parse_grid(const std::string& spec, Precision p) {
  const auto parts = [&] {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
      const auto pos = spec.find(':', start);
      out.push_back(spec.substr(start, pos == std::string::npos ? pos : pos - start));
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
    return out;
  }();
  if (parts.size() == 3) {
    const int n = std::stoi(parts[2]);
    return linear_grid(Real(parts[0], p), Real(parts[1], p), n);
  }
  if (parts.size() != 1) throw UsageError("grid must be LO:HI:N or a comma list");
  std::vector<Real> out;
  for (const auto& s : split_list(spec)) out.emplace_back(s, p);
  return out;
}

int run_eval(const std::string& name, const std::string& x_text, long digits) {
  const FormulaId id = formula_or_throw(name);
  const OracleConfig cfg = OracleConfig::for_digits(digits);
  const Real x(x_text, cfg.working());
  const LogErrorValue err = log_error(id, x, cfg);
  const int shown = static_cast<int>(digits);
  std::cout << "formula: " << tag(id) << '\n'
            << "x: " << x_text << '\n'
            << "target: "
            << (target_of(id) == Target::gamma_x_plus_1 ? "gamma(x+1)" : "gamma(x+1/2)") << '\n'
            << "value: " << approximate(id, x).sci(shown) << '\n'
            << "true: " << exp(ln_target(id, x, cfg)).sci(shown) << '\n'
            << "log_gap: " << err.log_gap.sci(6) << '\n'
            << "relative_error: " << err.relative_error.sci(6) << '\n'
            << "relative_error_4sig: " << err.relative_error.sci(4) << '\n';
  return kOk;
}

int run_table(const std::string& xs, const std::string& formulas, const std::string& format,
              long digits) {
  TableSpec spec;
  if (!xs.empty()) spec.abscissas = split_list(xs);
  if (!formulas.empty()) {
    spec.formulas.clear();
    for (const auto& f : split_list(formulas)) spec.formulas.push_back(formula_or_throw(f));
  }
  spec.precision_digits = digits;
  if (format == "csv") spec.format = TableFormat::csv;
  else if (format == "markdown") spec.format = TableFormat::markdown;
  else throw UsageError("format must be csv or markdown");
  spec.validate();
  std::cout << render_table(build_table(spec), spec.format);
  return kOk;
}

int run_verify(const std::string& only, const std::string& grid, const std::string& format,
               long digits) {
  SuiteOptions opts;
  opts.cfg = OracleConfig::for_digits(digits);
  if (!only.empty()) {
    const auto& names = suite_check_names();
    if (std::find(names.begin(), names.end(), only) == names.end()) {
      throw UsageError("unknown check '" + only + "'");
    }
    opts.only = only;
  }
  if (!grid.empty()) opts.grid = parse_grid(grid, opts.cfg.working());
  if (format != "text" && format != "csv") throw UsageError("format must be text or csv");
  const auto reports = run_suite(opts);
  std::cout << (format == "csv" ? reports_to_csv(reports) : reports_to_text(reports));
  const bool all_pass =
      std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return all_pass ? kOk : kFailure;
}

int run_rate(const std::string& formula, const std::string& xs, long digits) {
  const FormulaId id = formula_or_throw(formula);
  if (id != FormulaId::w2 && id != FormulaId::w2star) {
    throw UsageError("rate formula must be w2 or w2star");
  }
  const OracleConfig cfg = OracleConfig::for_digits(digits);
  std::vector<Real> points;
  for (const auto& s : split_list(xs)) points.emplace_back(s, cfg.working());
  const RateEstimate est = estimate_rate_constant(points, id, cfg);
  const Real limit(published_rate_constant(), cfg.working());
  std::cout << "formula: " << tag(id) << '\n';
  for (std::size_t i = 0; i < est.xs.size(); ++i) {
    std::cout << "x=" << est.xs[i].general() << " scaled_gap=" << est.scaled_gaps[i].sci(15)
              << '\n';
  }
  std::cout << "at_largest: " << est.at_largest.sci(15) << '\n'
            << "extrapolated: " << est.extrapolated.sci(15) << '\n'
            << "limit_869_over_2976750: " << limit.sci(15) << '\n'
            << "relative_deviation_at_largest: " << (est.at_largest / limit - 1).sci(4) << '\n';
  return kOk;
}

int run_constants(long digits) {
  const OracleConfig cfg = OracleConfig::for_digits(digits);
  const Real one(1, cfg.working());
  const Real beta = f0(one, cfg);
  const Real beta_star = f0_star(one, cfg);
  const int d = static_cast<int>(digits);
  std::cout << "beta: " << beta.fixed(d) << '\n'
            << "lambda: " << exp(beta).fixed(d) << '\n'
            << "lambda_star: " << exp(beta_star).fixed(d) << '\n'
            << "f0(1): " << beta.fixed(d) << '\n'
            << "f0_star(1): " << beta_star.fixed(d) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Windschitl-type gamma approximations: evaluation, tables, verification"};
  app.require_subcommand(1);

  long digits = 50;
  std::string formula, x_text, xs, formulas, only, grid;

  auto* eval = app.add_subcommand("eval", "Evaluate one formula and its relative error");
  eval->add_option("formula", formula, "Formula tag")->required();
  eval->add_option("x", x_text, "Abscissa")->required();
  eval->add_option("--digits", digits, "Target decimal digits")->capture_default_str();

  auto* table = app.add_subcommand("table", "Print the relative-error comparison table");
  table->add_option("--x", xs, "Comma-separated abscissas");
  table->add_option("--formulas", formulas, "Comma-separated formula tags");
  std::string table_format = "markdown";
  table->add_option("--format", table_format, "csv or markdown")->capture_default_str();
  table->add_option("--digits", digits, "Target decimal digits")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--only", only, "Run a single check");
  verify->add_option("--grid", grid, "Monotone/convex grid: LO:HI:N or comma list");
  std::string verify_format = "text";
  verify->add_option("--format", verify_format, "text or csv")->capture_default_str();
  long verify_digits = 60;
  verify->add_option("--digits", verify_digits, "Target decimal digits")->capture_default_str();

  auto* rate = app.add_subcommand("rate", "Estimate the x^9-scaled gap and its limit");
  std::string rate_formula = "w2";
  rate->add_option("--formula", rate_formula, "w2 or w2star")->capture_default_str();
  std::string rate_xs = "100,1000";
  rate->add_option("--x", rate_xs, "Comma-separated abscissas (>= 10)")->capture_default_str();
  long rate_digits = 60;
  rate->add_option("--digits", rate_digits, "Target decimal digits")->capture_default_str();

  auto* constants = app.add_subcommand("constants", "Print beta, lambda, lambda*, f0(1), f0*(1)");
  long const_digits = 12;
  constants->add_option("--digits", const_digits, "Decimal places")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("usage", e.what());
    return kUsage;
  }

  try {
    if (*eval) return run_eval(formula, x_text, digits);
    if (*table) return run_table(xs, formulas, table_format, digits);
    if (*verify) return run_verify(only, grid, verify_format, verify_digits);
    if (*rate) return run_rate(rate_formula, rate_xs, rate_digits);
    if (*constants) return run_constants(const_digits);
  } catch (const UsageError& e) {
    report_error("usage", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    report_error("domain", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    report_error("usage", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    report_error("computation", e.what());
    return kFailure;
  }
  return kUsage;
}
