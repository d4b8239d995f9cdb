#include "wgamma/oracle.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "wgamma/bernoulli.hpp"

namespace wgamma {

namespace {

// Minimal (threshold, terms) pairs per digit band with the threshold raised
// by 2. The table test re-derives the remainder and monotonicity claims from
// exact Bernoulli numbers.
constexpr std::array<OracleTableEntry, 17> kTable{{
    {15, 16, 8},     {20, 18, 11},    {30, 22, 17},    {40, 28, 22},    {50, 37, 25},
    {60, 41, 31},    {80, 56, 39},    {100, 66, 50},   {120, 81, 58},   {150, 95, 75},
    {200, 133, 95},  {250, 162, 120}, {300, 191, 145}, {400, 251, 194}, {500, 322, 237},
    {700, 440, 336}, {1000, 631, 477},
}};

// B_2k / (2k (2k-1)) and B_2k for k = 1..n, computed once.
struct SeriesCoefficients {
  std::vector<Rational> stirling;
  std::vector<Rational> bernoulli_even;
};

const SeriesCoefficients& coefficients(std::size_t n) {
  static std::mutex m;
  static SeriesCoefficients c;
  std::lock_guard lock(m);
  while (c.stirling.size() < n) {
    const long k = static_cast<long>(c.stirling.size()) + 1;
    const Rational b = bernoulli(static_cast<unsigned>(2 * k));
    c.bernoulli_even.push_back(b);
    c.stirling.push_back(b / Rational((2 * k) * (2 * k - 1)));
  }
  return c;
}

void require_positive(const Real& x, const char* what) {
  if (!(x.sign() > 0)) {
    throw DomainError(std::string(what) + " requires x > 0, got " + x.general());
  }
}

}  // namespace

OracleConfig OracleConfig::for_digits(long target_digits) {
  if (target_digits <= 0) throw std::invalid_argument("target digits must be positive");
  for (const auto& e : kTable) {
    if (target_digits <= e.max_digits) return {target_digits, e.shift_threshold, e.series_terms};
  }
  throw std::invalid_argument("target digits " + std::to_string(target_digits) +
                              " exceed the oracle table (max " +
                              std::to_string(kTable.back().max_digits) + ")");
}

long OracleConfig::guard_digits() const { return std::max(10L, target_digits / 10); }

Precision OracleConfig::working() const {
  return Precision::from_digits(target_digits + guard_digits());
}

Real OracleConfig::tolerance_for(const Real& magnitude) const {
  const Precision p = working();
  Real tol = pow(Real(10, p), -target_digits);
  const Real m = abs(magnitude);
  return m > Real(1, p) ? tol * m : tol;
}

std::span<const OracleTableEntry> oracle_table() { return kTable; }

Real ln_sqrt_two_pi(Precision prec) { return log(pi(prec) * 2) / 2; }

SeriesEvaluation ln_gamma_series(const Real& x, const OracleConfig& cfg) {
  require_positive(x, "ln_gamma_ref");
  const Precision p = cfg.working();
  Real z = x.with_precision(p);
  Real product(1, p);
  bool shifted = false;
  while (z < Real(cfg.shift_threshold, p)) {
    product *= z;
    z += 1;
    shifted = true;
  }

  const auto& c = coefficients(static_cast<std::size_t>(cfg.series_terms) + 1);
  const Real inv = 1 / z;
  const Real inv2 = inv * inv;
  Real power = inv;  // z^-(2k-1)
  Real sum(p);
  Real previous(p);
  bool decreasing = true;
  Real omitted(p);
  for (long k = 1; k <= cfg.series_terms + 1; ++k) {
    const Real term = Real(c.stirling[static_cast<std::size_t>(k - 1)], p) * power;
    const Real mag = abs(term);
    if (k > 1 && !(mag < previous)) decreasing = false;
    previous = mag;
    if (k <= cfg.series_terms) sum += term;
    else omitted = mag;
    power *= inv2;
  }

  Real value = (z - Real(Rational(1, 2), p)) * log(z) - z + ln_sqrt_two_pi(p) + sum;
  if (shifted) value -= log(product);
  return {std::move(value), std::move(z), std::move(omitted), decreasing};
}

Real ln_gamma_ref(const Real& x, const OracleConfig& cfg) {
  auto eval = ln_gamma_series(x, cfg);
  if (!eval.terms_decreasing) {
    throw std::runtime_error("Stirling series terms not decreasing at shifted argument " +
                             eval.shifted_argument.general());
  }
  return std::move(eval.value);
}

SeriesEvaluation trigamma_series(const Real& x, const OracleConfig& cfg) {
  require_positive(x, "trigamma_ref");
  const Precision p = cfg.working();
  Real z = x.with_precision(p);
  Real shift_sum(p);
  while (z < Real(cfg.shift_threshold, p)) {
    const Real inv = 1 / z;
    shift_sum += inv * inv;
    z += 1;
  }

  const auto& c = coefficients(static_cast<std::size_t>(cfg.series_terms) + 1);
  const Real inv = 1 / z;
  const Real inv2 = inv * inv;
  Real power = inv2 * inv;  // z^-(2k+1)
  Real sum = inv + inv2 / 2;
  Real previous(p);
  bool decreasing = true;
  Real omitted(p);
  for (long k = 1; k <= cfg.series_terms + 1; ++k) {
    const Real term = Real(c.bernoulli_even[static_cast<std::size_t>(k - 1)], p) * power;
    const Real mag = abs(term);
    if (k > 1 && !(mag < previous)) decreasing = false;
    previous = mag;
    if (k <= cfg.series_terms) sum += term;
    else omitted = mag;
    power *= inv2;
  }
  return {shift_sum + sum, std::move(z), std::move(omitted), decreasing};
}

Real trigamma_ref(const Real& x, const OracleConfig& cfg) {
  auto eval = trigamma_series(x, cfg);
  if (!eval.terms_decreasing) {
    throw std::runtime_error("trigamma series terms not decreasing at shifted argument " +
                             eval.shifted_argument.general());
  }
  return std::move(eval.value);
}

}  // namespace wgamma
