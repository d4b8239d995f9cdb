#pragma once

#include "wgamma/rational.hpp"

namespace wgamma {

/// Exact Bernoulli number B_n with the B_1 = -1/2 convention.
///
/// Computed from sum_{k=0}^{n} C(n+1, k) B_k = 0, B_0 = 1. Results are kept
/// in a process-wide cache guarded by a mutex; any interleaving of callers
/// observes the same values.
Rational bernoulli(unsigned n);

}  // namespace wgamma
