#pragma once

// P*_mu at a point with distinct coordinates, by symmetrizing
//   prod_{i<=l} x_i^{falling mu_i} prod_{i<=l, i<j<=n} (x_i + x_j)/(x_i - x_j)
// over S_n and dividing by (n-l)!. Slow; only for cross-checks.

#include <algorithm>
#include <numeric>
#include <vector>

#include "mgraph/partition.hpp"
#include "mgraph/rational.hpp"
#include "mgraph/special.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph::testing {

inline Rational pstar_symmetrized(const Partition& mu, const Point& x) {
  const int n = static_cast<int>(x.size()), l = mu.length();
  if (l > n) return Rational();
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  Rational total;
  do {
    Rational term = 1;
    for (int i = 0; i < l && !term.is_zero(); ++i) {
      term *= falling_factorial(x[w[i]], mu[i + 1]);
      for (int j = i + 1; j < n; ++j) term *= (x[w[i]] + x[w[j]]) / (x[w[i]] - x[w[j]]);
    }
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total / factorial(n - l);
}

}  // namespace mgraph::testing
