#include "wgamma/sign_criterion.hpp"

namespace wgamma {

std::string to_string(SignKind kind) {
  switch (kind) {
    case SignKind::all_positive_on_interval: return "all-positive-on-interval";
    case SignKind::all_negative_on_interval: return "all-negative-on-interval";
    case SignKind::single_crossing: return "single-crossing";
  }
  return "unknown";
}

Rational default_bracket_width() { return Rational(BigInt(1), BigInt(1) << 32); }

void check_block_shape(const Polynomial& p, int m) {
  const int n = p.degree();
  if (m < 0) throw ShapeViolation("block index m must be nonnegative");
  if (n <= m) {
    throw ShapeViolation("degree " + std::to_string(n) + " must exceed m = " + std::to_string(m));
  }
  if (p.leading().sign() <= 0) throw ShapeViolation("leading coefficient must be positive");
  if (p.coefficient(m).sign() >= 0) {
    throw ShapeViolation("coefficient of degree m = " + std::to_string(m) + " must be negative");
  }
  for (int k = 0; k < m; ++k) {
    if (p.coefficient(k).sign() > 0) {
      throw ShapeViolation("coefficient of degree " + std::to_string(k) + " must be <= 0");
    }
  }
  for (int k = m + 1; k < n; ++k) {
    if (p.coefficient(k).sign() < 0) {
      throw ShapeViolation("coefficient of degree " + std::to_string(k) + " must be >= 0");
    }
  }
}

namespace {

// Invariant on entry: p(lo) <= 0 < p(hi) with the root strictly inside.
Bracket bisect(const Polynomial& p, Rational lo, Rational hi, const Rational& width) {
  const Rational half(1, 2);
  while (hi - lo > width) {
    const Rational mid = (lo + hi) * half;
    const int s = p(mid).sign();
    if (s == 0) return {mid, mid};
    if (s < 0) lo = mid;
    else hi = mid;
  }
  return {lo, hi};
}

}  // namespace

SignClassification sign_criterion(const Polynomial& p, int m, const Rational& probe,
                                  const Rational& bracket_width) {
  check_block_shape(p, m);
  if (probe.sign() <= 0) throw std::invalid_argument("probe must be positive");
  if (bracket_width.sign() <= 0) throw std::invalid_argument("bracket width must be positive");

  SignClassification out{SignKind::single_crossing, {Rational(0), std::nullopt}, p(probe),
                         std::nullopt, {probe, probe}};
  const int s = out.value_at_probe.sign();
  if (s == 0) {
    out.crossing_bracket = Bracket{probe, probe};
    return out;
  }
  if (s > 0) {
    out.kind = SignKind::all_positive_on_interval;
    out.interval = {probe, std::nullopt};
    out.root_bracket = bisect(p, Rational(0), probe, bracket_width);
    return out;
  }
  out.kind = SignKind::all_negative_on_interval;
  out.interval = {Rational(0), probe};
  Rational hi = probe * Rational(2);
  while (p(hi).sign() <= 0) hi *= Rational(2);
  out.root_bracket = bisect(p, probe, hi, bracket_width);
  return out;
}

}  // namespace wgamma
