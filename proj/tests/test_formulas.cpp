#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wgamma/formulas.hpp"
#include "wgamma/harness.hpp"

using namespace wgamma;

namespace {

const OracleConfig kCfg = OracleConfig::for_digits(50);
const Precision kP = kCfg.working();

Real at(const char* s) { return Real(s, kP); }

Real rel(FormulaId id, const char* x) { return log_error(id, at(x), kCfg).relative_error; }

bool within(const Real& v, const char* expected, const char* rel_tol) {
  const Real e(expected, kP);
  return abs(v / e - 1) < Real(rel_tol, kP);
}

}  // namespace

TEST_CASE("tags round-trip") {
  for (FormulaId id : kAllFormulas) {
    const auto back = parse_formula(tag(id));
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  CHECK_FALSE(parse_formula("w3").has_value());
  CHECK(target_of(FormulaId::smith) == Target::gamma_x_plus_half);
  CHECK(target_of(FormulaId::yangchu2) == Target::gamma_x_plus_half);
  CHECK(target_of(FormulaId::w2) == Target::gamma_x_plus_1);
}

TEST_CASE("Stirling at 5") {
  CHECK(within(approximate(FormulaId::stirling, at("5")), "118.019167957590", "1e-14"));
  CHECK(within(rel(FormulaId::stirling, "5"), "1.65069e-2", "1e-5"));
}

TEST_CASE("W0 at 1 against its closed form") {
  const Real one(1, kP);
  const Real closed = abs(sqrt(2 * pi(kP) * sinh(one)) / exp(one) - 1);
  CHECK(abs(rel(FormulaId::w0, "1") - closed) < Real("1e-50", kP));
}

TEST_CASE("selected relative errors") {
  CHECK(approximate(FormulaId::w2, at("1")) < Real(1, kP));
  CHECK(rel(FormulaId::w2, "1").sci(4) == "2.407e-05");
  CHECK(rel(FormulaId::w1, "1").sci(4) == "1.832e-04");
  CHECK(rel(FormulaId::w2, "10").sci(4) == "2.785e-13");
  CHECK(rel(FormulaId::nemes2, "100").sci(4) == "3.684e-18");
}

TEST_CASE("every formula is accurate and finite across scales") {
  for (FormulaId id : kAllFormulas) {
    for (const char* x : {"1", "7.5", "1e3", "1e8"}) {
      INFO(tag(id) << " at " << x);
      const auto v = log_error(id, at(x), kCfg);
      CHECK(v.relative_error.is_finite());
      CHECK(v.relative_error < Real("0.1", kP));
    }
  }
  // Log-space evaluation: no overflow far beyond double range.
  CHECK(ln_approximate(FormulaId::w2, at("1e300")).is_finite());
}

TEST_CASE("domain errors") {
  for (FormulaId id : kAllFormulas) CHECK_THROWS_AS(ln_approximate(id, at("0")), DomainError);
  CHECK_THROWS_AS(ln_approximate(FormulaId::w2, at("-3")), DomainError);
}

TEST_CASE("error hierarchy at the table abscissas") {
  for (const char* x : {"1", "2", "5", "10", "20", "50", "100"}) {
    INFO("x = " << x);
    CHECK(rel(FormulaId::w2, x) < rel(FormulaId::nemes2, x));
    CHECK(rel(FormulaId::nemes2, x) < rel(FormulaId::chen, x));
    CHECK(rel(FormulaId::chen, x) < rel(FormulaId::w1, x));
    CHECK(rel(FormulaId::w1, x) < rel(FormulaId::w0, x));
  }
}

TEST_CASE("f0 values") {
  CHECK(within(f0(at("1"), kCfg), "2.40663292646629e-5", "1e-13"));
  CHECK(f0(at("2"), kCfg) < f0(at("1"), kCfg));
  CHECK(f0(at("2"), kCfg).sign() > 0);
  const OracleConfig wide = OracleConfig::for_digits(80);
  const Real x("1e6", wide.working());
  const Real scaled = f0(x, wide) * pow(x, 9);
  CHECK(within(scaled, "2.91929117325943e-4", "1e-9"));
}

TEST_CASE("f0* - f0 is D0 of the correction") {
  for (const char* s : {"1", "3", "12.5"}) {
    const Real x = at(s);
    const Real diff = f0_star(x, kCfg) - f0(x, kCfg);
    CHECK(abs(diff - d0(w2_correction(x))) < Real("1e-55", kP));
  }
  CHECK(d0(Real(0, kP)).is_zero());
  CHECK(d0(Real("0.5", kP)).sign() > 0);
  CHECK(d0(Real("-0.5", kP)).sign() > 0);
}

TEST_CASE("f0'' closed form against a central difference") {
  const Real x = at("2.5");
  const Real h("1e-12", kP);
  const Real fd = (f0(x + h, kCfg) - 2 * f0(x, kCfg) + f0(x - h, kCfg)) / (h * h);
  CHECK(abs(fd / f0_second_derivative(x, kCfg) - 1) < Real("1e-10", kP));
}

TEST_CASE("Alzer sandwich at sample points") {
  for (const char* s : {"0.1", "0.5", "2", "19"}) {
    const Real x = at(s);
    const Real lower = ln_approximate(FormulaId::w0, x);
    const Real truth = ln_target(FormulaId::w0, x, kCfg);
    const Real upper = lower + log1p(1 / (1620 * pow(x, 5)));
    INFO("x = " << s);
    CHECK(lower < truth);
    CHECK(truth < upper);
  }
}

TEST_CASE("best-constant sandwiches at sample points") {
  const Real beta = f0(at("1"), kCfg);
  const Real beta_star = f0_star(at("1"), kCfg);
  for (const char* s : {"1.5", "4", "30"}) {
    const Real x = at(s);
    const Real ln_ratio = ln_target(FormulaId::w0, x, kCfg) - ln_approximate(FormulaId::w0, x);
    const Real y = w2_correction(x);
    INFO("x = " << s);
    CHECK(y < ln_ratio);
    CHECK(ln_ratio < beta + y);
    CHECK(log1p(y) < ln_ratio);
    CHECK(ln_ratio < beta_star + log1p(y));
  }
}

TEST_CASE("Gamma(x+1/2) targets") {
  const Real x = at("3");
  const Real truth = ln_target(FormulaId::smith, x, kCfg);
  // Gamma(7/2) = (15/8) sqrt(pi)
  CHECK(abs(exp(truth) - Real(Rational(15, 8), kP) * sqrt(pi(kP))) < Real("1e-50", kP));
  CHECK(rel(FormulaId::smith, "3") < Real("1e-5", kP));
  CHECK(rel(FormulaId::yangchu2, "3") < rel(FormulaId::yangchu1, "3"));
}
