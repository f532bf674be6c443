#include "mgraph/symmetric.hpp"

#include <algorithm>
#include <set>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/matrix.hpp"
#include "mgraph/special.hpp"

namespace mgraph {

Point point_of(const Partition& lambda) {
  Point p;
  for (int x : lambda.parts()) p.emplace_back(x);
  return p;
}

namespace {

bool distinct(const Point& x) {
  std::set<Rational> seen(x.begin(), x.end());
  return seen.size() == x.size();
}

}  // namespace

Rational schur_eval_tableau(const Partition& mu, const Point& x) {
  const int k = static_cast<int>(x.size());
  if (mu.empty()) return 1;
  if (k == 0 || mu.length() > k) return 0;
  Rational total;
  for_each_reverse_tableau(mu, k, [&](const Filling& t) {
    Rational p = 1;
    for (const auto& row : t)
      for (int v : row) p *= x[v - 1];
    total += p;
  });
  return total;
}

Rational schur_eval_bialternant(const Partition& mu, const Point& x) {
  const int k = static_cast<int>(x.size());
  if (mu.length() > k) return 0;
  if (mu.empty()) return 1;
  if (!distinct(x)) throw std::invalid_argument("bialternant needs pairwise distinct coordinates");
  RationalMatrix num(k, k);
  Rational vand = 1;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) num(i, j) = x[i].pow(mu[j + 1] + k - 1 - j);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) vand *= x[i] - x[j];
  return det(num) / vand;
}

Rational schur_eval(const Partition& mu, const Point& x) {
  if (mu.length() <= static_cast<int>(x.size()) && distinct(x)) return schur_eval_bialternant(mu, x);
  return schur_eval_tableau(mu, x);
}

Rational shifted_schur_eval_det(const Partition& mu, const Point& x) {
  if (mu.empty()) return 1;
  const int k = std::max<int>(static_cast<int>(x.size()), mu.length());
  RationalMatrix num(k, k), den(k, k);
  for (int i = 0; i < k; ++i) {
    Rational xi = i < static_cast<int>(x.size()) ? x[i] : Rational();
    Rational shifted = xi + (k - 1 - i);
    for (int j = 0; j < k; ++j) {
      num(i, j) = falling_factorial(shifted, mu[j + 1] + k - 1 - j);
      den(i, j) = falling_factorial(shifted, k - 1 - j);
    }
  }
  Rational d = det(den);
  if (d.is_zero()) throw SingularMatrixError("shifted Schur: denominator vanishes (x_i - i collide)");
  return det(num) / d;
}

Rational shifted_schur_eval_tableau(const Partition& mu, const Point& x) {
  if (mu.empty()) return 1;
  // Coordinates beyond the support are zero but still contribute through
  // the content shift, so extend to l(mu) variables.
  Point xs = x;
  if (static_cast<int>(xs.size()) < mu.length()) xs.resize(mu.length());
  const int k = static_cast<int>(xs.size());
  Rational total;
  for_each_reverse_tableau(mu, k, [&](const Filling& t) {
    Rational p = 1;
    for (std::size_t i = 0; i < t.size(); ++i)
      for (std::size_t j = 0; j < t[i].size(); ++j) p *= xs[t[i][j] - 1] - Rational(int(j) - int(i));
    total += p;
  });
  return total;
}

Rational shifted_schur_eval(const Partition& mu, const Point& x) {
  try {
    return shifted_schur_eval_det(mu, x);
  } catch (const SingularMatrixError&) {
    if (mu.size() > 12) throw;
    return shifted_schur_eval_tableau(mu, x);
  }
}

std::vector<std::vector<int>> distinct_exponent_vectors(const Partition& mu, int k) {
  std::vector<std::vector<int>> out;
  if (mu.length() > k) return out;
  std::vector<int> e = mu.parts();
  e.resize(k, 0);
  std::sort(e.begin(), e.end());
  do {
    out.push_back(e);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

Rational monomial_eval(const Partition& mu, const Point& x) {
  if (mu.empty()) return 1;
  Rational total;
  for (const auto& e : distinct_exponent_vectors(mu, static_cast<int>(x.size()))) {
    Rational p = 1;
    for (std::size_t i = 0; i < e.size() && !p.is_zero(); ++i)
      if (e[i]) p *= x[i].pow(e[i]);
    total += p;
  }
  return total;
}

Rational factorial_monomial_eval(const Partition& mu, const Point& x) {
  if (mu.empty()) return 1;
  Rational total;
  for (const auto& e : distinct_exponent_vectors(mu, static_cast<int>(x.size()))) {
    Rational p = 1;
    for (std::size_t i = 0; i < e.size() && !p.is_zero(); ++i)
      if (e[i]) p *= falling_factorial(x[i], e[i]);
    total += p;
  }
  return total;
}

}  // namespace mgraph
