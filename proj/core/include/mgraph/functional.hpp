#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mgraph/matrix.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph {

enum class GeneratorFamily {
  HStar,        // one-row shifted Schur functions h*_m
  OneRowPStar,  // one-row factorial Schur P functions P*_(m)
};

// A multiplicative functional given by its values on the generators.
class FunctionalSpec {
 public:
  FunctionalSpec(GeneratorFamily family, std::vector<Rational> values);

  // pi(h*_m) = (-1)^m (z)_m (z')_m / m!, written through e = z+z', t = zz'.
  static FunctionalSpec young_zz(const Rational& e, const Rational& t, int cap);
  // pi(P*_(m)) = (-1)^m prod_{j<=m}(2t + (j-1)j) / (2 m!).
  static FunctionalSpec schur_t(const Rational& t, int cap);
  // Evaluation at a point (h* values) or a super point.
  static FunctionalSpec evaluation(const Point& x, int cap);
  static FunctionalSpec super_evaluation(const SuperPoint& sp, int cap);
  // Evaluation of P*_(m) at a point (F* coefficients halved).
  static FunctionalSpec pstar_evaluation(const Point& x, int cap);

  GeneratorFamily family() const { return family_; }
  int degree_cap() const { return static_cast<int>(values_.size()); }
  // g(0) = 1.
  const Rational& g(int m) const;
  const std::vector<Rational>& values() const { return values_; }
  // -pi(P*_(1)) = -g_1
  const Rational& t() const { return t_; }

 private:
  GeneratorFamily family_;
  std::vector<Rational> values_;
  Rational t_;
  Rational one_ = 1;
};

// Expansion over products of h*; entries (rho, c_rho) with c_rho != 0.
using BasisExpansion = std::vector<std::pair<Partition, Rational>>;

// Basis change to products of h* for elements of degree <= cap, determined
// by values on all diagrams of size <= cap.
class GeneratorBasis {
 public:
  explicit GeneratorBasis(int cap);
  // Shared instance per cap.
  static std::shared_ptr<const GeneratorBasis> get(int cap);

  int cap() const { return cap_; }
  // Diagrams of size <= cap, also the index set of the basis.
  const std::vector<Partition>& diagrams() const { return diagrams_; }

  // Target given by its values on diagrams(), in that order.
  BasisExpansion express(const std::vector<Rational>& target_values) const;
  // Cached expansion of s*_mu.
  const BasisExpansion& shifted_schur(const Partition& mu) const;

 private:
  int cap_;
  std::vector<Partition> diagrams_;
  std::unique_ptr<LuDecomposition> lu_;
  mutable std::mutex mu_;
  mutable std::map<Partition, BasisExpansion> cache_;
};

BasisExpansion express_in_generator_basis(const std::map<Partition, Rational>& target_values, int n);
// sum_rho c_rho prod_i g_{rho_i}
Rational apply_functional(const BasisExpansion& coeffs, const FunctionalSpec& spec);

}  // namespace mgraph
