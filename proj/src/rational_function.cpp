#include "wgamma/rational_function.hpp"

#include <stdexcept>

namespace wgamma {

RationalFunction::RationalFunction(const Polynomial& numer)
    : numer_(numer), denom_(Polynomial::constant(1)) {}

RationalFunction::RationalFunction(Polynomial numer, Polynomial denom)
    : numer_(std::move(numer)), denom_(std::move(denom)) {
  if (denom_.is_zero()) {
    throw std::domain_error("rational function with zero denominator");
  }
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.denom_ == b.denom_) return {a.numer_ + b.numer_, a.denom_};
  return {a.numer_ * b.denom_ + b.numer_ * a.denom_, a.denom_ * b.denom_};
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return {a.numer_ * b.numer_, a.denom_ * b.denom_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.numer_.is_zero()) {
    throw std::domain_error("division by the zero rational function");
  }
  return {a.numer_ * b.denom_, a.denom_ * b.numer_};
}

RationalFunction RationalFunction::derivative() const {
  return {numer_.derivative() * denom_ - numer_ * denom_.derivative(), denom_ * denom_};
}

RationalFunction RationalFunction::compose(const Polynomial& inner) const {
  return {numer_.compose(inner), denom_.compose(inner)};
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = denom_.evaluate(at);
  if (d.is_zero()) {
    throw std::domain_error("rational function evaluated at a pole");
  }
  return numer_.evaluate(at) / d;
}

std::string RationalFunction::str(const std::string& var) const {
  return "(" + numer_.str(var) + ") / (" + denom_.str(var) + ")";
}

bool ratfun_equal(const RationalFunction& f, const RationalFunction& g) {
  return (f.numer() * g.denom() - g.numer() * f.denom()).is_zero();
}

}  // namespace wgamma
