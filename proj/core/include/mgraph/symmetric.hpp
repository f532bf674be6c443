#pragma once

#include <vector>

#include "mgraph/partition.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

// Finitely many coordinates, implicitly followed by zeros.
using Point = std::vector<Rational>;

struct SuperPoint {
  Point x;
  Point y;
};

Point point_of(const Partition& lambda);

// Schur function s_mu.
Rational schur_eval_tableau(const Partition& mu, const Point& x);
Rational schur_eval_bialternant(const Partition& mu, const Point& x);
// Bialternant when the coordinates are distinct, tableau sum otherwise.
Rational schur_eval(const Partition& mu, const Point& x);

// Shifted Schur function s*_mu.
Rational shifted_schur_eval_det(const Partition& mu, const Point& x);
Rational shifted_schur_eval_tableau(const Partition& mu, const Point& x);
Rational shifted_schur_eval(const Partition& mu, const Point& x);

// m_mu and the factorial monomial m*_mu (falling powers).
Rational monomial_eval(const Partition& mu, const Point& x);
Rational factorial_monomial_eval(const Partition& mu, const Point& x);

// Distinct rearrangements of mu padded with zeros to length k. Empty when
// l(mu) > k.
std::vector<std::vector<int>> distinct_exponent_vectors(const Partition& mu, int k);

}  // namespace mgraph
