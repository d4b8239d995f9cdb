#include "wgamma/precision_real.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace wgamma {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

long clamp_bits(long bits) { return std::max(bits, kMinPrecisionBits); }

std::string format(const char* spec, int digits, mpfr_srcptr v) {
  const int needed = mpfr_snprintf(nullptr, 0, spec, digits, v);
  std::vector<char> buf(static_cast<std::size_t>(needed) + 1);
  mpfr_snprintf(buf.data(), buf.size(), spec, digits, v);
  return std::string(buf.data(), static_cast<std::size_t>(needed));
}

}  // namespace

Precision Precision::from_digits(long decimal_digits) {
  return Precision{clamp_bits(static_cast<long>(std::ceil(decimal_digits * kLog2Of10)))};
}

long Precision::decimal_digits() const { return static_cast<long>(std::floor(bits / kLog2Of10)); }

Real::Real(Precision prec) {
  mpfr_init2(value_, clamp_bits(prec.bits));
  mpfr_set_zero(value_, 1);
}

Real::Real(long value, Precision prec) : Real(prec) { mpfr_set_si(value_, value, MPFR_RNDN); }

Real::Real(const Rational& value, Precision prec) : Real(prec) {
  mpfr_set_q(value_, value.raw().get_mpq_t(), MPFR_RNDN);
}

Real::Real(std::string_view text, Precision prec) : Real(prec) {
  const std::string s(text);
  if (s.find('/') != std::string::npos) {
    try {
      mpfr_set_q(value_, Rational::parse(s).raw().get_mpq_t(), MPFR_RNDN);
    } catch (const std::domain_error&) {
      throw std::invalid_argument("zero denominator: '" + s + "'");
    }
    return;
  }
  // The delegating constructor has completed, so throwing here still runs
  // the destructor.
  char* end = nullptr;
  if (!s.empty()) mpfr_strtofr(value_, s.c_str(), &end, 10, MPFR_RNDN);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
  if (!is_finite()) {
    throw std::invalid_argument("non-finite number: '" + s + "'");
  }
}

Real::Real(const Real& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

Real Real::with_precision(Precision prec) const {
  Real out(prec);
  mpfr_set(out.value_, value_, MPFR_RNDN);
  return out;
}

Real Real::operator-() const {
  Real out = *this;
  mpfr_neg(out.value_, out.value_, MPFR_RNDN);
  return out;
}

// Binary ops widen the left operand first so the result carries the larger
// precision of the two.
#define WGAMMA_REAL_BINOP(op, fn)                               \
  Real& Real::operator op(const Real & rhs) {                   \
    if (mpfr_get_prec(value_) < mpfr_get_prec(rhs.value_)) {     \
      mpfr_prec_round(value_, mpfr_get_prec(rhs.value_), MPFR_RNDN); \
    }                                                           \
    fn(value_, value_, rhs.value_, MPFR_RNDN);                  \
    return *this;                                               \
  }
WGAMMA_REAL_BINOP(+=, mpfr_add)
WGAMMA_REAL_BINOP(-=, mpfr_sub)
WGAMMA_REAL_BINOP(*=, mpfr_mul)
WGAMMA_REAL_BINOP(/=, mpfr_div)
#undef WGAMMA_REAL_BINOP

Real& Real::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

Real operator-(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_sub(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

Real operator/(long a, const Real& b) {
  Real out(b.precision());
  mpfr_si_div(out.value_, a, b.value_, MPFR_RNDN);
  return out;
}

std::partial_ordering operator<=>(const Real& a, const Real& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::string Real::sci(int significant) const {
  return format("%.*Re", std::max(significant - 1, 0), value_);
}

std::string Real::fixed(int decimals) const { return format("%.*Rf", decimals, value_); }

std::string Real::general(int significant) const { return format("%.*Rg", significant, value_); }

std::ostream& operator<<(std::ostream& os, const Real& r) {
  return os << r.sci(static_cast<int>(r.precision().decimal_digits()));
}

Real abs(const Real& x) {
  Real out = x;
  mpfr_abs(out.get(), out.get(), MPFR_RNDN);
  return out;
}

Real pi(Precision prec) {
  Real out(prec);
  mpfr_const_pi(out.get(), MPFR_RNDN);
  return out;
}

#define WGAMMA_REAL_UNARY(name, fn)            \
  Real name(const Real& x) {                   \
    Real out(x.precision());                   \
    fn(out.get(), x.get(), MPFR_RNDN);         \
    return out;                                \
  }

namespace detail {
WGAMMA_REAL_UNARY(exp_raw, mpfr_exp)
WGAMMA_REAL_UNARY(expm1_raw, mpfr_expm1)
WGAMMA_REAL_UNARY(log_raw, mpfr_log)
WGAMMA_REAL_UNARY(log1p_raw, mpfr_log1p)
WGAMMA_REAL_UNARY(sqrt_raw, mpfr_sqrt)
WGAMMA_REAL_UNARY(sinh_raw, mpfr_sinh)
WGAMMA_REAL_UNARY(tanh_raw, mpfr_tanh)
WGAMMA_REAL_UNARY(coth_raw, mpfr_coth)
}  // namespace detail
#undef WGAMMA_REAL_UNARY

Real exp(const Real& x) { return detail::exp_raw(x); }
Real expm1(const Real& x) { return detail::expm1_raw(x); }

Real log(const Real& x) {
  if (x.sign() <= 0) throw DomainError("log of nonpositive argument " + x.general());
  return detail::log_raw(x);
}

Real log1p(const Real& x) {
  if (x <= Real(-1, x.precision())) throw DomainError("log1p argument <= -1: " + x.general());
  return detail::log1p_raw(x);
}

Real sqrt(const Real& x) {
  if (x.sign() < 0) throw DomainError("sqrt of negative argument " + x.general());
  return detail::sqrt_raw(x);
}

Real sinh(const Real& x) { return detail::sinh_raw(x); }
Real tanh(const Real& x) { return detail::tanh_raw(x); }

Real coth(const Real& x) {
  if (x.is_zero()) throw DomainError("coth of zero");
  return detail::coth_raw(x);
}

Real pow(const Real& x, long n) {
  Real out(x.precision());
  mpfr_pow_si(out.get(), x.get(), n, MPFR_RNDN);
  return out;
}

Real x_sinh_recip(const Real& x) {
  if (x.is_zero()) throw DomainError("x sinh(1/x) at x = 0");
  const Real t = 1 / x;
  if (abs(t) >= Real(Rational(1, 2), x.precision())) {
    return x * sinh(t);
  }
  // Terms shrink by at least a factor 24 each step, so stopping once a term
  // drops below 2^-(prec+8) leaves the tail below half an ulp of the sum (>= 1).
  const Real t2 = t * t;
  Real term(1, x.precision());
  Real sum(1, x.precision());
  const long stop = -(x.precision().bits + 8);
  for (long k = 1; !term.is_zero() && term.exponent2() > stop; ++k) {
    term *= t2;
    term /= (2 * k) * (2 * k + 1);
    sum += term;
  }
  return sum;
}

Real elem(const Real& x, ElemFn f) {
  switch (f) {
    case ElemFn::exp: return exp(x);
    case ElemFn::ln: return log(x);
    case ElemFn::sqrt: return sqrt(x);
    case ElemFn::sinh: return sinh(x);
    case ElemFn::coth: return coth(x);
    case ElemFn::tanh: return tanh(x);
  }
  throw std::invalid_argument("unknown elementary function");
}

}  // namespace wgamma
