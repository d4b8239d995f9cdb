#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <mpfr.h>

#include "wgamma/rational.hpp"

namespace wgamma {

/// Thrown when an elementary function or oracle is called outside its domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Binary precision, in bits. Always at least kMinPrecisionBits.
struct Precision {
  long bits;

  static Precision from_digits(long decimal_digits);
  long decimal_digits() const;
  friend auto operator<=>(Precision, Precision) = default;
};

inline constexpr long kMinPrecisionBits = 64;

/// Floating-point real with its own binary precision, rounded to nearest.
///
/// Arithmetic between two values is carried out at the larger of the two
/// precisions. No global rounding or precision state is consulted.
class Real {
 public:
  explicit Real(Precision prec = Precision{kMinPrecisionBits});
  Real(long value, Precision prec);
  Real(const Rational& value, Precision prec);
  /// Decimal literal such as "2.5", "1e-3" or "7/2"; throws on bad input.
  Real(std::string_view text, Precision prec);

  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  Precision precision() const { return Precision{static_cast<long>(mpfr_get_prec(value_))}; }
  /// Copy rounded to `prec`.
  Real with_precision(Precision prec) const;

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Base-2 exponent e with value = m * 2^e, 0.5 <= |m| < 1.
  long exponent2() const { return mpfr_get_exp(value_); }

  Real operator-() const;
  Real& operator+=(const Real& rhs);
  Real& operator-=(const Real& rhs);
  Real& operator*=(const Real& rhs);
  Real& operator/=(const Real& rhs);
  Real& operator*=(long rhs);
  Real& operator/=(long rhs);
  Real& operator+=(long rhs);
  Real& operator-=(long rhs);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long b) { return a += b; }
  friend Real operator-(Real a, long b) { return a -= b; }
  friend Real operator*(Real a, long b) { return a *= b; }
  friend Real operator/(Real a, long b) { return a /= b; }
  friend Real operator*(long a, Real b) { return b *= a; }
  friend Real operator+(long a, Real b) { return b += a; }
  friend Real operator-(long a, const Real& b);
  friend Real operator/(long a, const Real& b);

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_); }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b);

  /// Scientific notation with `significant` digits, e.g. "2.40660e-05".
  std::string sci(int significant) const;
  /// Fixed notation with `decimals` digits after the point.
  std::string fixed(int decimals) const;
  /// Shortest "%g"-style rendering with up to `significant` digits.
  std::string general(int significant = 15) const;

 private:
  mpfr_t value_;
};

std::ostream& operator<<(std::ostream& os, const Real& r);

Real abs(const Real& x);
Real pi(Precision prec);
Real exp(const Real& x);
Real expm1(const Real& x);
/// Natural log; DomainError for x <= 0.
Real log(const Real& x);
/// log(1 + x); DomainError for x <= -1.
Real log1p(const Real& x);
/// DomainError for x < 0.
Real sqrt(const Real& x);
Real sinh(const Real& x);
Real tanh(const Real& x);
/// DomainError for x == 0.
Real coth(const Real& x);
Real pow(const Real& x, long n);

/// x * sinh(1/x). For 1/x < 1/2 it is summed as the even Taylor series
/// sum t^(2k)/(2k+1)!, t = 1/x, which avoids forming sinh(1/x) at all.
Real x_sinh_recip(const Real& x);

enum class ElemFn { exp, ln, sqrt, sinh, coth, tanh };

/// Dispatches to the elementary function `f`; domain violations throw
/// DomainError instead of producing NaN.
Real elem(const Real& x, ElemFn f);

}  // namespace wgamma
