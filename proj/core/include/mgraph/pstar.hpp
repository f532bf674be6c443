#pragma once

#include <vector>

#include "mgraph/functional.hpp"
#include "mgraph/matrix.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph {

// Values of P*_(1..n) at x, or under a functional given on P*_(m).
std::vector<Rational> pstar_one_row_values(const Point& x, int n);
std::vector<Rational> pstar_one_row_values(const FunctionalSpec& spec, int n);

// Values of P*_(p,q) for p+q <= max_sum built from one-row values v_1..v_S
// (S >= max_sum). Works for any algebra homomorphism.
class TwoRowTable {
 public:
  explicit TwoRowTable(std::vector<Rational> one_row);
  int max_sum() const { return s_; }
  // P*_(p,q), antisymmetric; q = 0 gives the one-row value.
  Rational operator()(int p, int q) const;
  const Rational& one_row(int m) const;

 private:
  Rational& at(int a, int b) { return t_[a * (s_ + 1) + b]; }
  const Rational& at(int a, int b) const { return t_[a * (s_ + 1) + b]; }
  std::vector<Rational> v_;
  int s_;
  std::vector<Rational> t_;
};

Rational pstar_two_row(const std::vector<Rational>& one_row, int p, int q);

// The bordered skew matrix whose Pfaffian is P*_mu.
RationalMatrix pstar_pfaffian_matrix(const StrictPartition& mu, const TwoRowTable& table);

Rational pstar_eval(const StrictPartition& mu, const TwoRowTable& table);
Rational pstar_eval(const StrictPartition& mu, const Point& x);
Rational pstar_eval(const StrictPartition& mu, const FunctionalSpec& spec);

}  // namespace mgraph
