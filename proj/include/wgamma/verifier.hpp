#pragma once

#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgamma/formulas.hpp"
#include "wgamma/oracle.hpp"
#include "wgamma/polynomial.hpp"
#include "wgamma/rational_function.hpp"

namespace wgamma {

enum class Status { pass, fail };

std::string to_string(Status s);

struct Witness {
  std::string description;
  std::string value;
};

/// Result of one verification check. A failing report always carries at
/// least one witness naming the violated quantity.
struct VerificationReport {
  VerificationReport() = default;
  explicit VerificationReport(std::string name) : check_name(std::move(name)) {}

  std::string check_name;
  Status status = Status::pass;
  std::vector<Witness> witnesses;
  std::optional<Real> tolerance_used;

  bool passed() const { return status == Status::pass; }
  /// Informational witness; does not affect status.
  void note(std::string description, std::string value);
  /// Records a witness prefixed "violated:" and marks the report failed when
  /// `ok` is false. Returns `ok`.
  bool require(bool ok, std::string description, std::string value);
  /// Appends all witnesses of `other` and fails if it failed.
  void absorb(const VerificationReport& other);
};

/// Thrown when a computation would need more working precision than it has.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Published proof data -------------------------------------------------------

/// The 23 coefficients a_0..a_22 of p22 as printed.
const std::array<Rational, 23>& published_p22_coefficients();
/// Degrees listed as carrying positive / negative coefficients.
const std::vector<int>& published_positive_degrees();
const std::vector<int>& published_negative_degrees();
/// p20(1) as printed (the printed value is -p20(1) with its sign).
Rational published_p20_at_one();
/// 869 / 2976750.
Rational published_rate_constant();

// Proof objects ----------------------------------------------------------------

/// r(x) = x (x^4 + 227/66 x^2 + 4237/2640) / (x^6 + 155/44 x^4 + 329/176 x^2 + 375/4928).
RationalFunction trigamma_lower_bound();
/// 1 - t^2/6 + 7t^4/360 - 31t^6/15120 + 127t^8/604800 - 73t^10/3421440.
Polynomial csch_truncation();
/// Coefficient of t^(2i) in the csch truncation: -2 (2^(2i-1) - 1) B_2i / (2i)!.
Rational csch_coefficient(unsigned i);
/// Numerator of the lower bound for f01(t) over (33t^2+35)^3 (60t^6+...+77).
Polynomial f01_bound_numerator();
/// p22 = f01_bound_numerator() / t^11.
Polynomial p22();
/// p20 built from the printed negative degrees plus degrees 0..3 of `p`.
Polynomial p20_from(const Polynomial& p);
/// y(x) = 7 / (324 x^3 (35 x^2 + 33)) as a rational function.
RationalFunction w2_correction_function();

// Checks -------------------------------------------------------------------------

VerificationReport verify_lemma1(const OracleConfig& cfg = {}, int grid_points = 30);
VerificationReport verify_lemma2(const OracleConfig& cfg = {}, int grid_points = 30);
/// `expected` defaults to the printed table; pass a perturbed copy for a
/// negative control.
VerificationReport verify_theorem1_polynomials(
    const std::array<Rational, 23>& expected = published_p22_coefficients(),
    const OracleConfig& cfg = {}, int grid_points = 20);
VerificationReport verify_corollaries(const OracleConfig& cfg = {}, int max_n = 20);
/// W0(x) < Gamma(x+1) < W0(x) (1 + 1/(1620 x^5)) on a log-spaced grid in [0.1, 20].
VerificationReport verify_alzer(const OracleConfig& cfg = {}, int grid_points = 50);

enum class ErrorFunction { f0, f0star };

/// Strictly decreasing, strictly convex (positive second divided
/// differences) and inside (0, fn(1)) on `grid`. The grid must be strictly
/// increasing with minimum >= 1; otherwise std::invalid_argument.
VerificationReport verify_monotone_convex(ErrorFunction which, const std::vector<Real>& grid,
                                          const OracleConfig& cfg = {});
/// Same test for an arbitrary function, with an absolute tolerance that every
/// difference must clear.
VerificationReport verify_monotone_convex(const std::string& name,
                                          const std::function<Real(const Real&)>& fn,
                                          const std::vector<Real>& grid, const Real& tolerance);

/// n evenly spaced points from lo to hi inclusive.
std::vector<Real> linear_grid(const Real& lo, const Real& hi, int n);
/// n log-spaced points from lo to hi inclusive.
std::vector<Real> log_grid(const Real& lo, const Real& hi, int n);

struct RateEstimate {
  std::vector<Real> xs;
  /// x^9 (ln Gamma(x+1) - ln approx(x)) at each x.
  std::vector<Real> scaled_gaps;
  Real at_largest;
  /// Polynomial extrapolation in 1/x to x = infinity across all xs.
  Real extrapolated;
};

/// `which` must be w2 or w2star; xs increasing with min >= 10. Throws
/// PrecisionError when a gap would keep fewer than 10 significant digits.
RateEstimate estimate_rate_constant(const std::vector<Real>& xs, FormulaId which,
                                    const OracleConfig& cfg = OracleConfig::for_digits(60));

/// Rate check: at x = 1000 the scaled gap matches 869/2976750 within 0.05%.
VerificationReport verify_rate_constant(FormulaId which, const OracleConfig& cfg);

// Suite --------------------------------------------------------------------------

struct SuiteOptions {
  OracleConfig cfg = OracleConfig::for_digits(60);
  /// Run a single check by name when set.
  std::optional<std::string> only;
  /// Grid for the monotone/convex checks.
  std::vector<Real> grid;
  /// Run checks on worker threads; results are ordered by name either way.
  bool parallel = true;
};

const std::vector<std::string>& suite_check_names();

/// Runs the checks and returns the reports sorted by check_name. Throws
/// std::invalid_argument for an unknown `only` name.
std::vector<VerificationReport> run_suite(const SuiteOptions& options);

std::string reports_to_text(const std::vector<VerificationReport>& reports);
/// Header `check_name,status,witness,value`, one row per witness.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

}  // namespace wgamma
