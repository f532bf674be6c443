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

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mgraph/family.hpp"
#include "mgraph/functional.hpp"
#include "mgraph/graph_kind.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

using PhiFunction = std::function<Rational(const Partition&)>;

struct HarmonicityViolation {
  Partition mu;
  Rational lhs;  // phi(mu)
  Rational rhs;  // sum over covers of kappa * phi
};

struct HarmonicityReport {
  int max_level = 0;
  std::size_t vertices_checked = 0;
  std::vector<HarmonicityViolation> violations;
  // Vertices with |mu| <= max_level where phi < 0.
  std::vector<std::pair<Partition, Rational>> negatives;

  bool harmonic() const { return violations.empty(); }
  bool nonnegative() const { return negatives.empty(); }
};

// Checks phi(mu) = sum_{lambda covers mu} kappa(mu, lambda) phi(lambda) for
// every |mu| < max_level, and records negative values for |mu| <= max_level.
// Covers beyond max_length are dropped (phi vanishes there).
HarmonicityReport check_harmonicity(const PhiFunction& phi, const GraphKind& kind, int max_level,
                                    std::optional<int> max_length = {}, int workers = 1);
HarmonicityReport check_harmonicity(const HarmonicFamily& family, int max_level, int workers = 1);

struct LevelMeasure {
  int n = 0;
  std::vector<std::pair<Partition, Rational>> mass;  // level order
  Rational total() const;
};

// M_n(lambda) = dim(lambda) * phi(lambda) over the whole level.
LevelMeasure level_measure(const HarmonicFamily& family, int n, int workers = 1);

struct Admissibility {
  bool admissible = false;
  bool surrogate = false;  // true when decided by scanning phi values
  std::string reason;
};

// Parameter regions where they are known; otherwise phi >= 0 through
// surrogate_level.
Admissibility admissible(const HarmonicFamily& family, int surrogate_level = 6);

enum class LatticeMode { Join, Meet };

// sum_{|lambda| = n} dim(mu, lambda) max/min(phi(lambda), psi(lambda)).
Rational lattice_bound_approx(const HarmonicFamily& phi, const HarmonicFamily& psi, const Partition& mu, int n,
                              LatticeMode mode);

// phi(mu) = (-1)^n pi(s*_mu) / (t)_n for an H*-functional (Young graph), or
// (-1)^n pi(P*_mu) / (t)_n for a one-row P* functional (Schur graph).
Rational extrapolated_phi(const FunctionalSpec& spec, const Partition& mu);

}  // namespace mgraph
