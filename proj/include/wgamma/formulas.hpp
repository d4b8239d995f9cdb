#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "wgamma/oracle.hpp"
#include "wgamma/precision_real.hpp"

namespace wgamma {

/// Gamma-function approximations. Each is written in the factored form
///   sqrt(2 pi x) (x/e)^x * correction(x)
/// or a close variant; see ln_approximate() for the exact expressions.
enum class FormulaId {
  stirling,   // sqrt(2 pi x) (x/e)^x
  w0,         // Windschitl: ... (x sinh(1/x))^(x/2)
  w1,         // ... (x sinh(1/x) + 1/(810 x^6))^(x/2)
  w2,         // W0 * exp(7 / (324 x^3 (35 x^2 + 33)))
  w2star,     // W0 * (1 + 7 / (324 x^3 (35 x^2 + 33)))
  lsm,        // ... (x sinh(1/x + a7/x^7 + a9/x^9 + a11/x^11))^(x/2)
  ramanujan,  // sqrt(pi) (x/e)^x (8x^3 + 4x^2 + x + 1/30)^(1/6)
  smith,      // Gamma(x+1/2) ~ sqrt(2 pi) (x/e)^x (2x tanh(1/(2x)))^(x/2)
  nemes1,     // ... (1 + 1/(12 x^2 - 1/10))^x
  nemes2,     // ... exp((210 x^2 + 53) / (360 x (7 x^2 + 2)))
  chen,       // ... (1 + 1/(12 x^3 + 24x/7 - 1/2))^(x^2 + 53/210)
  yangchu1,   // Gamma(x+1/2) ~ sqrt(2 pi) (x/e)^x exp(-x / (24 (x^2 + 7/120)))
  yangchu2,   // Gamma(x+1/2) ~ sqrt(2 pi) (x/e)^x exp(-1/(24x) + 7/(2880 x (x^2 + 31/98)))
};

inline constexpr std::array<FormulaId, 13> kAllFormulas{
    FormulaId::stirling, FormulaId::w0,        FormulaId::w1,     FormulaId::w2,
    FormulaId::w2star,   FormulaId::lsm,       FormulaId::ramanujan, FormulaId::smith,
    FormulaId::nemes1,   FormulaId::nemes2,    FormulaId::chen,   FormulaId::yangchu1,
    FormulaId::yangchu2,
};

/// The quantity a formula approximates.
enum class Target { gamma_x_plus_1, gamma_x_plus_half };

Target target_of(FormulaId id);

/// Stable lowercase tag ("w2", "nemes2", ...).
std::string_view tag(FormulaId id);
std::optional<FormulaId> parse_formula(std::string_view tag);

/// ln of the approximation, evaluated at x's precision in log space so no
/// intermediate overflows for large x. Throws DomainError for x <= 0 or where
/// a formula's own expression leaves its domain (nemes1, chen near 0).
Real ln_approximate(FormulaId id, const Real& x);
/// exp(ln_approximate(id, x)).
Real approximate(FormulaId id, const Real& x);

/// ln Gamma(x+1) or ln Gamma(x+1/2) according to target_of(id).
Real ln_target(FormulaId id, const Real& x, const OracleConfig& cfg);

struct LogErrorValue {
  Real x;
  FormulaId formula;
  /// ln(true) - ln(approximation).
  Real log_gap;
  /// |approximation - true| / true = |expm1(-log_gap)|.
  Real relative_error;
};

LogErrorValue log_error(FormulaId id, const Real& x, const OracleConfig& cfg);

/// y(x) = 7 / (324 x^3 (35 x^2 + 33)), the W2 correction exponent.
Real w2_correction(const Real& x);

/// f0(x) = ln Gamma(x+1) - ln W2(x).
Real f0(const Real& x, const OracleConfig& cfg);
/// f0*(x) = ln Gamma(x+1) - ln W2*(x).
Real f0_star(const Real& x, const OracleConfig& cfg);
/// D0(y) = y - ln(1 + y).
Real d0(const Real& y);

/// Closed form of f0''(x):
///   psi'(x+1) + 1/(2x^3 sinh^2(1/x)) - 3/(2x) + 1/(2x^2)
///   - (7/54) (6125x^4 + 6545x^2 + 2178) / (x^5 (35x^2 + 33)^3)
Real f0_second_derivative(const Real& x, const OracleConfig& cfg);

}  // namespace wgamma
