#pragma once

// Shared generators and independent oracles for the test binaries.

#include <cstdint>
#include <optional>
#include <random>
#include <string>

#include "wgamma/polynomial.hpp"
#include "wgamma/sign_criterion.hpp"

namespace wgamma::testing {

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) { return std::mt19937_64{20250611ULL ^ salt}; }

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Small random rational num/den with |num| <= bound, 1 <= den <= bound.
inline Rational random_rational(std::mt19937_64& rng, long bound = 50) {
  return Rational(uniform(rng, -bound, bound), uniform(rng, 1, bound));
}

inline Rational random_positive(std::mt19937_64& rng, long bound = 50) {
  return Rational(uniform(rng, 1, bound), uniform(rng, 1, bound));
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int max_degree) {
  const int d = static_cast<int>(uniform(rng, -1, max_degree));
  Polynomial p;
  for (int k = 0; k <= d; ++k) p.set_coefficient(k, random_rational(rng));
  return p;
}

struct ShapedPolynomial {
  Polynomial p;
  int m;
};

/// Polynomial with c_0..c_{m-1} <= 0, c_m < 0, c_{m+1}..c_{n-1} >= 0, c_n > 0.
/// Roughly a third of the optional coefficients are zero.
inline ShapedPolynomial random_shaped(std::mt19937_64& rng, int max_degree) {
  const int n = static_cast<int>(uniform(rng, 1, max_degree));
  const int m = static_cast<int>(uniform(rng, 0, n - 1));
  Polynomial p;
  for (int k = 0; k <= n; ++k) {
    Rational c;
    const bool zero = uniform(rng, 0, 2) == 0;
    if (k < m) c = zero ? Rational(0) : -random_positive(rng);
    else if (k == m) c = -random_positive(rng);
    else if (k < n) c = zero ? Rational(0) : random_positive(rng);
    else c = random_positive(rng);
    p.set_coefficient(k, c);
  }
  return {p, m};
}

/// Cauchy bound: every root r satisfies |r| < 1 + max |c_k / c_n|.
inline Rational cauchy_root_bound(const Polynomial& p) {
  Rational best(0);
  for (int k = 0; k < p.degree(); ++k) {
    const Rational r = (p.coefficient(k) / p.leading()).abs();
    if (r > best) best = r;
  }
  return best + 1;
}

/// Grid-sampling sign oracle. Samples p at `samples` equally spaced points of
/// (0, max(bound, 2 probe)], verifies the result against what the criterion
/// claims, and returns a description of the first disagreement.
inline std::optional<std::string> disagreement(const Polynomial& p, const Rational& probe,
                                               const SignClassification& cls, int samples = 1000) {
  Rational span = cauchy_root_bound(p);
  if (probe * 2 > span) span = probe * 2;
  int changes = 0;
  int last_sign = 0;
  for (int i = 1; i <= samples; ++i) {
    const Rational t = span * Rational(i, samples);
    const int s = p.evaluate(t).sign();
    if (s != 0 && last_sign != 0 && s != last_sign) ++changes;
    if (s != 0) last_sign = s;
    switch (cls.kind) {
      case SignKind::all_positive_on_interval:
        if (t > probe && s <= 0) return "nonpositive at " + t.str() + " above probe";
        break;
      case SignKind::all_negative_on_interval:
        if (t < probe && s >= 0) return "nonnegative at " + t.str() + " below probe";
        break;
      case SignKind::single_crossing:
        if ((t < probe && s >= 0) || (t > probe && s <= 0)) return "wrong side of root at " + t.str();
        break;
    }
    if (t < cls.root_bracket.first && s > 0) return "positive below root bracket at " + t.str();
    if (t > cls.root_bracket.second && s < 0) return "negative above root bracket at " + t.str();
  }
  if (changes > 1) return "more than one sign change on the grid";
  if (p.evaluate(cls.root_bracket.first).sign() > 0 || p.evaluate(cls.root_bracket.second).sign() < 0) {
    return "root bracket does not straddle a sign change";
  }
  return std::nullopt;
}

}  // namespace wgamma::testing
