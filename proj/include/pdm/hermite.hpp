// Physicists' Hermite polynomials by three-term recurrence.
#pragma once

#include <utility>

namespace pdm {

struct HermiteEvaluator {
  /// H_n(z) with H_0 = 1, H_1 = 2z, H_{n+1} = 2z H_n - 2n H_{n-1}.
  static double value(unsigned n, double z) { return value_pair(n, z).first; }

  /// H_n'(z) = 2n H_{n-1}(z).
  static double derivative(unsigned n, double z) {
    if (n == 0) return 0.0;
    return 2.0 * n * value_pair(n, z).second;
  }

  /// (H_n(z), H_{n-1}(z)); the second entry is 0 for n = 0.
  static std::pair<double, double> value_pair(unsigned n, double z) {
    double prev = 0.0;
    double cur = 1.0;
    for (unsigned j = 0; j < n; ++j) {
      const double next = 2.0 * z * cur - 2.0 * j * prev;
      prev = cur;
      cur = next;
    }
    return {cur, prev};
  }
};

}  // namespace pdm
