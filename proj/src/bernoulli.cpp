#include "wgamma/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace wgamma {

namespace {

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::vector<Rational>& cache() {
  static std::vector<Rational> values{Rational(1)};
  return values;
}

}  // namespace

Rational bernoulli(unsigned n) {
  std::lock_guard lock(cache_mutex());
  auto& values = cache();
  while (values.size() <= n) {
    const unsigned m = static_cast<unsigned>(values.size());
    // B_m = -1/(m+1) * sum_{k<m} C(m+1, k) B_k
    Rational sum;
    for (unsigned k = 0; k < m; ++k) {
      if (values[k].is_zero()) continue;
      sum += Rational(binomial(m + 1, k)) * values[k];
    }
    values.push_back(-sum / Rational(static_cast<long>(m) + 1));
  }
  return values[n];
}

}  // namespace wgamma
