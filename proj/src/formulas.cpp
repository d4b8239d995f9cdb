#include "wgamma/formulas.hpp"

#include <stdexcept>
#include <string>

namespace wgamma {

namespace {

Real rat(long n, long d, Precision p) { return Real(Rational(n, d), p); }

void require_positive(const Real& x, FormulaId id) {
  if (!(x.sign() > 0)) {
    throw DomainError(std::string(tag(id)) + " requires x > 0, got " + x.general());
  }
}

// ln( sqrt(2 pi x) (x/e)^x )
Real ln_stirling(const Real& x) {
  const Precision p = x.precision();
  return ln_sqrt_two_pi(p) + (x + rat(1, 2, p)) * log(x) - x;
}

// ln( sqrt(2 pi) (x/e)^x ), the common factor of the Gamma(x+1/2) formulas.
Real ln_half_base(const Real& x) { return ln_sqrt_two_pi(x.precision()) + x * log(x) - x; }

Real ln_w0(const Real& x) { return ln_stirling(x) + x * log(x_sinh_recip(x)) / 2; }

// Log of a formula factor that must be positive; names the formula otherwise.
Real checked_log(const Real& v, FormulaId id) {
  if (!(v.sign() > 0)) {
    throw DomainError(std::string(tag(id)) + ": argument of ln is nonpositive");
  }
  return log(v);
}

}  // namespace

Target target_of(FormulaId id) {
  switch (id) {
    case FormulaId::smith:
    case FormulaId::yangchu1:
    case FormulaId::yangchu2: return Target::gamma_x_plus_half;
    default: return Target::gamma_x_plus_1;
  }
}

std::string_view tag(FormulaId id) {
  switch (id) {
    case FormulaId::stirling: return "stirling";
    case FormulaId::w0: return "w0";
    case FormulaId::w1: return "w1";
    case FormulaId::w2: return "w2";
    case FormulaId::w2star: return "w2star";
    case FormulaId::lsm: return "lsm";
    case FormulaId::ramanujan: return "ramanujan";
    case FormulaId::smith: return "smith";
    case FormulaId::nemes1: return "nemes1";
    case FormulaId::nemes2: return "nemes2";
    case FormulaId::chen: return "chen";
    case FormulaId::yangchu1: return "yangchu1";
    case FormulaId::yangchu2: return "yangchu2";
  }
  return "unknown";
}

std::optional<FormulaId> parse_formula(std::string_view text) {
  for (FormulaId id : kAllFormulas) {
    if (tag(id) == text) return id;
  }
  return std::nullopt;
}

Real w2_correction(const Real& x) {
  const Precision p = x.precision();
  const Real x2 = x * x;
  return Real(7, p) / (324 * x2 * x * (35 * x2 + 33));
}

Real ln_approximate(FormulaId id, const Real& x) {
  require_positive(x, id);
  const Precision p = x.precision();
  switch (id) {
    case FormulaId::stirling: return ln_stirling(x);
    case FormulaId::w0: return ln_w0(x);
    case FormulaId::w1: {
      const Real inner = x_sinh_recip(x) + 1 / (810 * pow(x, 6));
      return ln_stirling(x) + x * log(inner) / 2;
    }
    case FormulaId::w2: return ln_w0(x) + w2_correction(x);
    case FormulaId::w2star: return ln_w0(x) + log1p(w2_correction(x));
    case FormulaId::lsm: {
      const Real u = 1 / x + rat(1, 810, p) / pow(x, 7) + rat(-67, 42525, p) / pow(x, 9) +
                     rat(19, 8505, p) / pow(x, 11);
      return ln_stirling(x) + x * checked_log(x * sinh(u), id) / 2;
    }
    case FormulaId::ramanujan: {
      const Real poly = ((8 * x + 4) * x + 1) * x + rat(1, 30, p);
      return log(pi(p)) / 2 + x * log(x) - x + log(poly) / 6;
    }
    case FormulaId::smith: {
      const Real inner = 2 * x * tanh(1 / (2 * x));
      return ln_half_base(x) + x * log(inner) / 2;
    }
    case FormulaId::nemes1: {
      const Real denom = 12 * x * x - rat(1, 10, p);
      if (denom.is_zero()) throw DomainError("nemes1: pole at 12x^2 = 1/10");
      return ln_stirling(x) + x * checked_log(1 + 1 / denom, id);
    }
    case FormulaId::nemes2: {
      const Real x2 = x * x;
      return ln_stirling(x) + (210 * x2 + 53) / (360 * x * (7 * x2 + 2));
    }
    case FormulaId::chen: {
      const Real denom = 12 * x * x * x + Real(24, p) * x / 7 - rat(1, 2, p);
      if (denom.is_zero()) throw DomainError("chen: pole at 12x^3 + 24x/7 = 1/2");
      return ln_stirling(x) + (x * x + rat(53, 210, p)) * checked_log(1 + 1 / denom, id);
    }
    case FormulaId::yangchu1:
      return ln_half_base(x) - x / (24 * (x * x + rat(7, 120, p)));
    case FormulaId::yangchu2:
      return ln_half_base(x) - 1 / (24 * x) + Real(7, p) / (2880 * x * (x * x + rat(31, 98, p)));
  }
  throw std::invalid_argument("unknown formula");
}

Real approximate(FormulaId id, const Real& x) { return exp(ln_approximate(id, x)); }

Real ln_target(FormulaId id, const Real& x, const OracleConfig& cfg) {
  const Precision p = cfg.working();
  const Real shift = target_of(id) == Target::gamma_x_plus_1 ? Real(1, p) : rat(1, 2, p);
  return ln_gamma_ref(x.with_precision(p) + shift, cfg);
}

LogErrorValue log_error(FormulaId id, const Real& x, const OracleConfig& cfg) {
  const Real xw = x.with_precision(cfg.working());
  Real gap = ln_target(id, xw, cfg) - ln_approximate(id, xw);
  Real rel = abs(expm1(-gap));
  return {xw, id, std::move(gap), std::move(rel)};
}

Real f0(const Real& x, const OracleConfig& cfg) {
  const Real xw = x.with_precision(cfg.working());
  return ln_target(FormulaId::w2, xw, cfg) - ln_approximate(FormulaId::w2, xw);
}

Real f0_star(const Real& x, const OracleConfig& cfg) {
  const Real xw = x.with_precision(cfg.working());
  return ln_target(FormulaId::w2star, xw, cfg) - ln_approximate(FormulaId::w2star, xw);
}

Real d0(const Real& y) { return y - log1p(y); }

Real f0_second_derivative(const Real& x, const OracleConfig& cfg) {
  const Real xw = x.with_precision(cfg.working());
  if (!(xw.sign() > 0)) throw DomainError("f0'' requires x > 0");
  const Precision p = xw.precision();
  const Real x2 = xw * xw;
  const Real x3 = x2 * xw;
  const Real sh = sinh(1 / xw);
  const Real rational_part =
      Real(7, p) * ((6125 * x2 + 6545) * x2 + 2178) / (54 * x3 * x2 * pow(35 * x2 + 33, 3));
  return trigamma_ref(xw + 1, cfg) + 1 / (2 * x3 * sh * sh) - Real(3, p) / (2 * xw) +
         1 / (2 * x2) - rational_part;
}

}  // namespace wgamma
