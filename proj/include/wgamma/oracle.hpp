#pragma once

#include <span>

#include "wgamma/precision_real.hpp"

namespace wgamma {

/// Accuracy settings for the reference ln Gamma / trigamma evaluations.
///
/// Arguments below `shift_threshold` are shifted upward by the recurrences
/// before `series_terms` terms of the asymptotic series are summed. for_digits()
/// picks both from a fixed table so that the first omitted term stays below
/// 10^-(target_digits + 5) at the threshold.
struct OracleConfig {
  long target_digits = 50;
  long shift_threshold = 37;
  long series_terms = 25;

  /// Throws std::invalid_argument outside the tabulated range.
  static OracleConfig for_digits(long target_digits);

  long guard_digits() const;
  /// Precision used for every internal evaluation: target plus guard digits.
  Precision working() const;
  /// Largest absolute error the target accuracy allows for a result of
  /// magnitude `magnitude`: 10^-target * max(1, |magnitude|).
  Real tolerance_for(const Real& magnitude) const;
};

/// One row of the threshold table.
struct OracleTableEntry {
  long max_digits;
  long shift_threshold;
  long series_terms;
};

std::span<const OracleTableEntry> oracle_table();

/// Value plus the bracketing-remainder diagnostics of one series evaluation.
struct SeriesEvaluation {
  Real value;
  /// Argument after upward shifting.
  Real shifted_argument;
  /// Magnitude of the first omitted series term.
  Real remainder_bound;
  /// Whether the term magnitudes decreased from k = 1 through the first
  /// omitted term (the condition under which the remainder bound holds).
  bool terms_decreasing;
};

/// ln Gamma(x) for x > 0 via upward shifting and the Stirling series.
/// Throws DomainError for x <= 0 and std::runtime_error if the series guard
/// fails.
Real ln_gamma_ref(const Real& x, const OracleConfig& cfg);
SeriesEvaluation ln_gamma_series(const Real& x, const OracleConfig& cfg);

/// Trigamma psi'(x) for x > 0, same construction.
Real trigamma_ref(const Real& x, const OracleConfig& cfg);
SeriesEvaluation trigamma_series(const Real& x, const OracleConfig& cfg);

/// ln sqrt(2 pi) at precision `prec`.
Real ln_sqrt_two_pi(Precision prec);

}  // namespace wgamma
