#pragma once

#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "wgamma/rational.hpp"

namespace wgamma {

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficients are indexed by degree. Trailing zeros are trimmed after every
/// mutation, so the zero polynomial has no stored coefficients and
/// degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> coefficients);
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  /// The polynomial `t`.
  static Polynomial identity();
  /// c * t^k.
  static Polynomial monomial(const Rational& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Coefficient of t^k; zero beyond the stored range.
  Rational coefficient(int k) const;
  Rational leading() const;
  std::span<const Rational> coefficients() const { return coeffs_; }

  void set_coefficient(int k, const Rational& value);

  Rational operator()(const Rational& at) const { return evaluate(at); }
  /// Horner evaluation.
  Rational evaluate(const Rational& at) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scale);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial pow(unsigned exponent) const;
  Polynomial derivative() const;
  /// p(q(t)).
  Polynomial compose(const Polynomial& inner) const;

  /// Smallest k with a nonzero t^k coefficient; -1 for the zero polynomial.
  int lowest_degree() const;
  /// Divides by t^k. Throws std::domain_error unless t^k divides exactly.
  Polynomial divide_by_power_of_t(int k) const;

  /// Keeps only the listed degrees.
  Polynomial select(std::span<const int> degrees) const;

  /// Human-readable form in the variable `var`, highest degree first.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

enum class PolyOp { add, sub, mul };

/// Exact ring operation in canonical form.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);
Rational poly_eval(const Polynomial& p, const Rational& at);

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

}  // namespace wgamma
