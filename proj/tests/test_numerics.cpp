#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "wgamma/bernoulli.hpp"
#include "wgamma/oracle.hpp"
#include "wgamma/precision_real.hpp"

using namespace wgamma;
using namespace wgamma::testing;

namespace {

const OracleConfig kCfg = OracleConfig::for_digits(50);
const Precision kP = kCfg.working();

bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) < tol; }

// sinh(1) summed exactly as a rational Taylor polynomial; the tail after
// 60 terms is far below 10^-100.
Real sinh_one_taylor(Precision p) {
  Rational s(0);
  for (unsigned k = 0; k < 60; ++k) s += Rational(BigInt(1), factorial(2 * k + 1));
  return Real(s, p);
}

Real mpfr_lngamma_route(const Real& x) {
  Real out(x.precision());
  mpfr_lngamma(out.get(), x.get(), MPFR_RNDN);
  return out;
}

}  // namespace

TEST_SUITE("real") {
  TEST_CASE("precision bookkeeping") {
    CHECK(Precision::from_digits(1).bits >= kMinPrecisionBits);
    CHECK(Precision::from_digits(100).decimal_digits() >= 100);
    const Real a(1, Precision{64});
    const Real b(1, Precision{256});
    CHECK((a + b).precision().bits == 256);
    CHECK(Real(Rational(1, 3), Precision{200}).with_precision(Precision{80}).precision().bits == 80);
  }

  TEST_CASE("parsing") {
    CHECK(Real("7/2", kP) == Real(Rational(7, 2), kP));
    CHECK(Real("2.5", kP) == Real(Rational(5, 2), kP));
    CHECK(Real("1e-3", kP).sci(3) == "1.00e-03");
    CHECK_THROWS_AS(Real("abc", kP), std::invalid_argument);
    CHECK_THROWS_AS(Real("1/0", kP), std::invalid_argument);
  }

  TEST_CASE("elementary values") {
    const Real tol = kCfg.tolerance_for(Real(1, kP));
    CHECK(elem(Real(0, kP), ElemFn::exp) == Real(1, kP));
    CHECK(close(elem(Real(1, kP), ElemFn::sinh), sinh_one_taylor(kP), tol));
    CHECK(close(elem(Real(4, kP), ElemFn::sqrt), Real(2, kP), tol));
    CHECK(close(elem(exp(Real(3, kP)), ElemFn::ln), Real(3, kP), tol));
    CHECK(close(elem(Real(2, kP), ElemFn::coth) * elem(Real(2, kP), ElemFn::tanh), Real(1, kP), tol));
    CHECK(close(expm1(Real("1e-30", kP)), Real("1e-30", kP), Real("1e-59", kP)));
    CHECK(close(log1p(Real("1e-30", kP)), Real("1e-30", kP), Real("1e-59", kP)));
  }

  TEST_CASE("domain errors") {
    CHECK_THROWS_AS(elem(Real(0, kP), ElemFn::ln), DomainError);
    CHECK_THROWS_AS(elem(Real(-1, kP), ElemFn::ln), DomainError);
    CHECK_THROWS_AS(elem(Real(-1, kP), ElemFn::sqrt), DomainError);
    CHECK_THROWS_AS(elem(Real(0, kP), ElemFn::coth), DomainError);
    CHECK_THROWS_AS(log1p(Real(-1, kP)), DomainError);
  }

  TEST_CASE("x sinh(1/x) on both evaluation branches") {
    const Real tol = kCfg.tolerance_for(Real(1, kP)) * 10;
    for (const char* s : {"0.3", "1", "2.5", "3", "10", "1000", "1e12"}) {
      const Real x(s, kP);
      INFO("x = " << s);
      CHECK(close(x_sinh_recip(x), x * sinh(1 / x), tol));
    }
  }

  TEST_CASE("formatting") {
    const Real v("0.0000240660", kP);
    CHECK(v.sci(6) == "2.40660e-05");
    CHECK(Real(Rational(1, 3), kP).fixed(4) == "0.3333");
    CHECK(Real(100, kP).general() == "100");
  }
}

TEST_SUITE("oracle") {
  TEST_CASE("special values") {
    const Real tol = kCfg.tolerance_for(Real(1, kP));
    CHECK(abs(ln_gamma_ref(Real(1, kP), kCfg)) < tol);
    CHECK(abs(ln_gamma_ref(Real(2, kP), kCfg)) < tol);
    CHECK(close(ln_gamma_ref(Real(Rational(1, 2), kP), kCfg), log(sqrt(pi(kP))), tol));
    const Real pi2 = pi(kP) * pi(kP);
    CHECK(close(trigamma_ref(Real(1, kP), kCfg), pi2 / 6, tol));
    CHECK(close(trigamma_ref(Real(Rational(1, 2), kP), kCfg), pi2 / 2, tol));
  }

  TEST_CASE("ln n! from exact factorials") {
    for (unsigned long n : {1UL, 10UL, 100UL}) {
      const Real exact = log(Real(Rational(factorial(n)), kP));
      const Real ref = ln_gamma_ref(Real(static_cast<long>(n + 1), kP), kCfg);
      INFO("n = " << n);
      CHECK(abs(ref - exact) < kCfg.tolerance_for(exact));
    }
  }

  TEST_CASE("agrees with MPFR's own lngamma") {
    auto rng = make_rng(10);
    for (int i = 0; i < 30; ++i) {
      const Real x = Real(Rational(uniform(rng, 1, 200000), 1000), kP);
      const Real a = ln_gamma_ref(x, kCfg);
      INFO("x = " << x.general());
      CHECK(abs(a - mpfr_lngamma_route(x)) < kCfg.tolerance_for(a));
    }
  }

  TEST_CASE("doubling the precision changes nothing at target accuracy") {
    auto rng = make_rng(11);
    const OracleConfig hi = OracleConfig::for_digits(100);
    for (int i = 0; i < 20; ++i) {
      const Rational q(uniform(rng, 1, 200000), 1000);
      const Real a = ln_gamma_ref(Real(q, kP), kCfg);
      const Real b = ln_gamma_ref(Real(q, hi.working()), hi);
      INFO("x = " << q.str());
      CHECK(abs(a - b) < kCfg.tolerance_for(b));
    }
  }

  TEST_CASE("functional equation and trigamma recurrence") {
    const Real tol = kCfg.tolerance_for(Real(10, kP));
    for (const char* s : {"0.01", "0.75", "3.7", "36.5", "150"}) {
      const Real x(s, kP);
      INFO("x = " << s);
      CHECK(close(ln_gamma_ref(x + 1, kCfg) - ln_gamma_ref(x, kCfg), log(x), tol));
      const Real residual = trigamma_ref(x + 1, kCfg) - trigamma_ref(x, kCfg) + 1 / (x * x);
      CHECK(abs(residual) < Real("1e-45", kP));
    }
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(ln_gamma_ref(Real(0, kP), kCfg), DomainError);
    CHECK_THROWS_AS(trigamma_ref(Real(-2, kP), kCfg), DomainError);
    CHECK_THROWS_AS(OracleConfig::for_digits(1001), std::invalid_argument);
    CHECK_THROWS_AS(OracleConfig::for_digits(0), std::invalid_argument);
  }

  TEST_CASE("guard digits and working precision") {
    CHECK(OracleConfig::for_digits(50).guard_digits() == 10);
    CHECK(OracleConfig::for_digits(300).guard_digits() == 30);
    CHECK(OracleConfig::for_digits(50).working().decimal_digits() >= 60);
  }

  TEST_CASE("table thresholds bound the first omitted term") {
    // Recomputed with exact Bernoulli numbers: at the shift threshold X the
    // first omitted ln Gamma term |B_{2N+2}| / ((2N+2)(2N+1) X^{2N+1}) is below
    // 10^-(D+5), and term magnitudes decrease up to and including it.
    long prev_digits = 0;
    for (const auto& e : oracle_table()) {
      INFO("digits " << e.max_digits);
      CHECK(e.max_digits > prev_digits);
      prev_digits = e.max_digits;
      const Precision p = Precision::from_digits(e.max_digits + 40);
      const Real X(e.shift_threshold, p);
      auto term = [&](long k) {
        const Rational b = bernoulli(static_cast<unsigned>(2 * k)).abs();
        return Real(b, p) / Real((2 * k) * (2 * k - 1), p) / pow(X, 2 * k - 1);
      };
      const Real bound = pow(Real(10, p), -(e.max_digits + 5));
      CHECK(term(e.series_terms + 1) < bound);
      for (long k = 1; k <= e.series_terms; ++k) REQUIRE(term(k + 1) < term(k));
    }
  }

  TEST_CASE("series diagnostics") {
    const auto s = ln_gamma_series(Real(Rational(1, 2), kP), kCfg);
    CHECK(s.terms_decreasing);
    CHECK(s.shifted_argument >= Real(kCfg.shift_threshold, kP));
    CHECK(s.remainder_bound < Real("1e-55", kP));

    OracleConfig bad = kCfg;
    bad.shift_threshold = 1;
    bad.series_terms = 40;
    const auto b = ln_gamma_series(Real(1, kP), bad);
    CHECK_FALSE(b.terms_decreasing);
    CHECK_THROWS_AS(ln_gamma_ref(Real(1, kP), bad), std::runtime_error);
    CHECK_THROWS_AS(trigamma_ref(Real(1, kP), bad), std::runtime_error);
  }

  TEST_CASE("ln sqrt(2 pi)") {
    CHECK(close(ln_sqrt_two_pi(kP), log(2 * pi(kP)) / 2, kCfg.tolerance_for(Real(1, kP))));
  }
}
