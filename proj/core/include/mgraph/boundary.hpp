// Copyright 2026 The mgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgraph/bigfloat.hpp"
#include "mgraph/family.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

// Finite-support point of the Thoma simplex. Kingman points have empty beta.
struct ThomaPoint {
  std::vector<Rational> alpha;
  std::vector<Rational> beta;

  ThomaPoint() = default;
  // Sorts nothing; throws ParameterError unless both lists are nonincreasing,
  // nonnegative and sum(alpha) + sum(beta) <= 1.
  ThomaPoint(std::vector<Rational> a, std::vector<Rational> b = {});
  Rational gamma() const;
  std::string str() const;
};

// Boundary faces: the ordered simplex Delta_l, or Delta_{d,d} with an
// ordered alpha block and an ordered beta block.
struct Face {
  enum class Kind { Simplex, DoubleSimplex };
  Kind kind = Kind::Simplex;
  int l = 0;  // dimension count: l for Delta_l, d for Delta_{d,d}
  int coordinates() const { return kind == Kind::Simplex ? l : 2 * l; }
  std::string str() const;
};

enum class BoundaryKind { Young, Kingman, Schur, Gamma };
BoundaryKind parse_boundary_kind(std::string_view s);
std::string to_string(BoundaryKind k);

// Embedding of a level-n vertex: rows / n.
std::vector<Rational> embed_rows(const Partition& nu, int n);
// ((P_i + 1/2) / n ; (Q_i + 1/2) / n) from the Frobenius coordinates.
ThomaPoint embed_frobenius(const Partition& nu, int n);

// Integral of prod a_i^{kappa_i - 1} over the ordered simplex of dimension
// l - 1, taken as the symmetric average: prod Gamma(kappa_i) /
// (l! Gamma(sum kappa_i)). Measure is d a_1 ... d a_{l-1}.
Rational dirichlet_integral(const std::vector<int>& kappa);

// Integral over the full (unordered) simplex of
// prod a_i^{e_i} / prod_{(i,j) in pairs} (a_i + a_j). Pairs must be disjoint.
Rational simplex_integral(const std::vector<int>& exponents, const std::vector<std::pair<int, int>>& pairs = {});

struct DensitySpec {
  BoundaryKind kind;
  Partition lambda;
  Face face;
  Rational constant;
  // Young: det[a^{lambda+delta}] V(a); Kingman: m_lambda(a);
  // Schur: det[a^lambda] Pf[(a_i-a_j)/(a_i+a_j)];
  // Gamma: det[a^p] det[b^q] det[1/(a_i+b_j)].
  static DensitySpec make(BoundaryKind kind, const Partition& lambda);
  std::string describe() const;
};

// Point is the full coordinate list (alpha then beta for Gamma); if one
// coordinate short, the last is completed so the sum is 1.
Rational density(const DensitySpec& spec, const std::vector<Rational>& point);

struct SelbergReport {
  BoundaryKind kind;
  Partition lambda, mu;
  Rational lhs, rhs;
  std::size_t terms = 0;  // monomial integrals evaluated
  bool equal = false;
};

// LHS from the truncated harmonic family, RHS by expanding the integrand
// into monomials and integrating term by term.
SelbergReport selberg_verify(BoundaryKind kind, const Partition& lambda, const Partition& mu, int workers = 1);

// s_mu specialized at omega via h_k and Jacobi-Trudi.
Rational young_kernel(const Partition& mu, const ThomaPoint& omega);
// Extended monomial function at alpha (beta must be empty).
Rational kingman_kernel(const Partition& mu, const ThomaPoint& omega);

struct ConvergencePoint {
  Partition nu;
  Rational mass;                  // exact M_n(nu)
  std::vector<Rational> point;    // embedded coordinates
  bool interior = false;
  std::optional<BigFloat> ratio;  // M_n n^{l-1} / density, interior only
};

struct ConvergenceLevel {
  int n = 0;
  Rational total;  // exact sum of M_n
  std::size_t interior = 0;
  BigFloat worst_ratio_error;  // max |ratio - 1| over interior points
  BigFloat binned_distance;    // sum over bins |M_n(bin) - integral of density|
  std::vector<ConvergencePoint> points;
};

struct ConvergenceOptions {
  int resolution = 20;            // bins per free coordinate
  Rational epsilon = Rational(1, 10);  // interior margin
  double ratio_tolerance = 0.05;
  bool keep_points = false;
  int workers = 1;
  mpfr_prec_t precision = BigFloat::kDefaultPrecision;
};

struct ConvergenceReport {
  std::string family;
  std::vector<ConvergenceLevel> levels;
  bool ratio_pass = false;     // largest n within tolerance
  bool distance_pass = false;  // binned distance strictly decreasing in n
  bool pass() const { return ratio_pass && distance_pass; }
};

// Truncated Young, Kingman and Schur families only.
ConvergenceReport convergence_experiment(const HarmonicFamily& family, const std::vector<int>& n_values,
                                         const ConvergenceOptions& opts = {});

}  // namespace mgraph
