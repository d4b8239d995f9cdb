#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "wgamma/polynomial.hpp"

namespace wgamma {

/// Thrown when a polynomial does not have the single-sign-change block shape
/// required by sign_criterion().
class ShapeViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class SignKind { all_positive_on_interval, all_negative_on_interval, single_crossing };

std::string to_string(SignKind kind);

/// Open interval (lo, hi); an empty `hi` means +infinity.
struct OpenInterval {
  Rational lo;
  std::optional<Rational> hi;
};

using Bracket = std::pair<Rational, Rational>;

/// Outcome of the block-shape sign criterion at a probe point.
///
/// `kind` and `interval` carry the sign claim: positive on (probe, inf) or
/// negative on (0, probe). When the probe is itself the root, kind is
/// single_crossing, `interval` is (0, inf) and `crossing_bracket` holds the
/// degenerate bracket [probe, probe]. `root_bracket` always locates the
/// unique positive root, refined to the requested width.
struct SignClassification {
  SignKind kind;
  OpenInterval interval;
  Rational value_at_probe;
  std::optional<Bracket> crossing_bracket;
  Bracket root_bracket;
};

/// Default bracket width, 2^-32.
Rational default_bracket_width();

/// Checks the coefficient pattern
///   c_0..c_{m-1} <= 0, c_m < 0, c_{m+1}..c_{n-1} >= 0, c_n > 0, n > m
/// and throws ShapeViolation naming the first offending degree otherwise.
void check_block_shape(const Polynomial& p, int m);

/// Applies the criterion: such a polynomial has exactly one positive root, is
/// negative below it and positive above it, so the sign of p(probe) decides
/// the sign on one side of the probe. Requires probe > 0.
SignClassification sign_criterion(const Polynomial& p, int m, const Rational& probe,
                                  const Rational& bracket_width = default_bracket_width());

}  // namespace wgamma
