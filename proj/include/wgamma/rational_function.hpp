#pragma once

#include <string>

#include "wgamma/polynomial.hpp"

namespace wgamma {

/// Quotient of two exact polynomials. Never reduced; equality is decided by
/// exact cross-multiplication, so no polynomial GCD is required.
class RationalFunction {
 public:
  RationalFunction() : numer_(), denom_(Polynomial::constant(1)) {}
  RationalFunction(const Polynomial& numer);  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when `denom` is the zero polynomial.
  RationalFunction(Polynomial numer, Polynomial denom);

  const Polynomial& numer() const { return numer_; }
  const Polynomial& denom() const { return denom_; }

  RationalFunction operator-() const { return {-numer_, denom_}; }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  /// Throws std::domain_error when `b` is identically zero.
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);

  /// Quotient rule.
  RationalFunction derivative() const;
  /// f(q(x)) for a polynomial substitution q.
  RationalFunction compose(const Polynomial& inner) const;

  /// Throws std::domain_error at a pole.
  Rational evaluate(const Rational& at) const;

  std::string str(const std::string& var = "x") const;

 private:
  Polynomial numer_;
  Polynomial denom_;
};

/// True iff f.numer * g.denom - g.numer * f.denom is the zero polynomial.
bool ratfun_equal(const RationalFunction& f, const RationalFunction& g);

}  // namespace wgamma
