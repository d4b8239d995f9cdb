#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "wgamma/verifier.hpp"

using namespace wgamma;

namespace {

bool has_witness(const VerificationReport& r, const std::string& needle) {
  return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const Witness& w) {
    return w.description.find(needle) != std::string::npos;
  });
}

std::string dump(const VerificationReport& r) { return reports_to_text({r}); }

const OracleConfig kCfg = OracleConfig::for_digits(60);

}  // namespace

TEST_CASE("every suite check passes") {
  const auto reports = run_suite(SuiteOptions{});
  CHECK(reports.size() == suite_check_names().size());
  for (const auto& r : reports) {
    INFO(dump(r));
    CHECK(r.passed());
    CHECK_FALSE(r.witnesses.empty());
  }
}

TEST_CASE("suite output is sorted and identical serial or parallel") {
  SuiteOptions a;
  SuiteOptions b;
  b.parallel = false;
  const auto ra = run_suite(a);
  const auto rb = run_suite(b);
  CHECK(std::is_sorted(ra.begin(), ra.end(),
                       [](const auto& x, const auto& y) { return x.check_name < y.check_name; }));
  CHECK(reports_to_csv(ra) == reports_to_csv(rb));
}

TEST_CASE("single check and unknown name") {
  SuiteOptions o;
  o.only = "lemma2";
  const auto r = run_suite(o);
  REQUIRE(r.size() == 1);
  CHECK(r[0].check_name == "lemma2");
  o.only = "lemma9";
  CHECK_THROWS_AS(run_suite(o), std::invalid_argument);
}

TEST_CASE("CSV serialization") {
  VerificationReport r{"demo"};
  r.note("plain", "1");
  r.note("has, comma", "say \"hi\"");
  const std::string csv = reports_to_csv({r});
  CHECK(csv.rfind("check_name,status,witness,value\n", 0) == 0);
  CHECK(csv.find("demo,pass,plain,1\n") != std::string::npos);
  CHECK(csv.find("demo,pass,\"has, comma\",\"say \"\"hi\"\"\"\n") != std::string::npos);
}

TEST_CASE("exact proof artifacts") {
  for (unsigned i = 0; i <= 5; ++i) {
    CHECK(csch_coefficient(i) == csch_truncation().coefficient(static_cast<int>(2 * i)));
  }
  const Polynomial p = p22();
  for (int k = 0; k <= 22; ++k) CHECK(p.coefficient(k) == published_p22_coefficients()[k]);
  CHECK(p20_from(p).evaluate(1) == published_p20_at_one());
}

TEST_CASE("perturbing one p22 coefficient is caught and located") {
  auto table = published_p22_coefficients();
  table[13] += Rational::parse("1/1000000000000000000000000000000");
  const auto r = verify_theorem1_polynomials(table, kCfg);
  CHECK_FALSE(r.passed());
  CHECK(has_witness(r, "violated: a_13 matches"));
  CHECK_FALSE(has_witness(r, "violated: a_12 matches"));
}

TEST_CASE("monotone/convex rejects a constant function") {
  const Precision p = kCfg.working();
  const auto grid = linear_grid(Real(1, p), Real(50, p), 100);
  const auto r = verify_monotone_convex(
      "constant", [p](const Real&) { return Real(Rational(1, 7), p); }, grid, Real("1e-50", p));
  CHECK_FALSE(r.passed());
  CHECK(has_witness(r, "violated"));
}

TEST_CASE("monotone/convex grid validation") {
  const Precision p = kCfg.working();
  CHECK_THROWS_AS(verify_monotone_convex(ErrorFunction::f0, linear_grid(Real("0.5", p), Real(5, p), 10), kCfg),
                  std::invalid_argument);
  std::vector<Real> bad{Real(3, p), Real(2, p), Real(4, p)};
  CHECK_THROWS_AS(verify_monotone_convex(ErrorFunction::f0, bad, kCfg), std::invalid_argument);
}

TEST_CASE("x^9 f0(10) is within 5% of the limit") {
  const Precision p = kCfg.working();
  const Real x(10, p);
  const Real scaled = f0(x, kCfg) * pow(x, 9);
  const Real limit(published_rate_constant(), p);
  CHECK(abs(scaled / limit - 1) < Real("0.05", p));
}

TEST_CASE("scaled gap approaches the limit monotonically") {
  const OracleConfig wide = OracleConfig::for_digits(80);
  const Precision p = wide.working();
  const std::vector<Real> xs{Real(100, p), Real(300, p), Real(1000, p), Real(3000, p), Real(10000, p)};
  for (FormulaId id : {FormulaId::w2, FormulaId::w2star}) {
    const auto est = estimate_rate_constant(xs, id, wide);
    for (std::size_t i = 1; i < xs.size(); ++i) CHECK(est.scaled_gaps[i] > est.scaled_gaps[i - 1]);
    const Real limit(published_rate_constant(), p);
    CHECK(abs(est.extrapolated / limit - 1) < Real("1e-9", p));
  }
}

TEST_CASE("rate check rejects insufficient precision and wrong formulas") {
  const OracleConfig narrow = OracleConfig::for_digits(30);
  const std::vector<Real> xs{Real(10000, narrow.working())};
  CHECK_THROWS_AS(estimate_rate_constant(xs, FormulaId::w2, narrow), PrecisionError);
  CHECK_THROWS_AS(estimate_rate_constant(xs, FormulaId::w1, kCfg), std::invalid_argument);
}

TEST_CASE("grids") {
  const Precision p = kCfg.working();
  const auto g = linear_grid(Real(1, p), Real(50, p), 100);
  CHECK(g.size() == 100);
  CHECK(g.front() == Real(1, p));
  CHECK(g.back() == Real(50, p));
  const auto l = log_grid(Real("0.1", p), Real(20, p), 50);
  CHECK(l.size() == 50);
  CHECK(abs(l.back() - Real(20, p)) < Real("1e-60", p));
}
