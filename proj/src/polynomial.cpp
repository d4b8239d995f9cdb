#include "wgamma/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace wgamma {

Polynomial::Polynomial(std::initializer_list<Rational> coefficients) : coeffs_(coefficients) {
  trim();
}

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial{c}; }

Polynomial Polynomial::identity() { return Polynomial{Rational(0), Rational(1)}; }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) {
    throw std::invalid_argument("negative monomial degree");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

void Polynomial::set_coefficient(int k, const Rational& value) {
  if (k < 0) {
    throw std::invalid_argument("negative coefficient index");
  }
  const auto idx = static_cast<std::size_t>(k);
  if (idx >= coeffs_.size()) {
    coeffs_.resize(idx + 1);
  }
  coeffs_[idx] = value;
  trim();
}

Rational Polynomial::evaluate(const Rational& at) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out = constant(1);
  Polynomial base = *this;
  while (exponent > 0) {
    if (exponent & 1u) out *= base;
    exponent >>= 1u;
    if (exponent > 0) base *= base;
  }
  return out;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + constant(*it);
  }
  return acc;
}

int Polynomial::lowest_degree() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (!coeffs_[k].is_zero()) return static_cast<int>(k);
  }
  return -1;
}

Polynomial Polynomial::divide_by_power_of_t(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  if (is_zero() || k == 0) return *this;
  if (lowest_degree() < k) {
    throw std::domain_error("t^" + std::to_string(k) + " does not divide polynomial");
  }
  return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial Polynomial::select(std::span<const int> degrees) const {
  Polynomial out;
  for (int k : degrees) out.set_coefficient(k, coefficient(k));
  return out;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coefficient(k);
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0) os << "-";
    first = false;
    const Rational mag = c.abs();
    if (k == 0 || mag != Rational(1)) {
      os << mag;
      if (k > 0) os << "*";
    }
    if (k >= 1) os << var;
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
  }
  throw std::invalid_argument("unknown polynomial op");
}

Rational poly_eval(const Polynomial& p, const Rational& at) { return p.evaluate(at); }

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

}  // namespace wgamma
