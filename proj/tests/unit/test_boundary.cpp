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

#include <doctest.h>

#include "mgraph/boundary.hpp"
#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/harmonic.hpp"

using namespace mgraph;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }
}  // namespace

TEST_SUITE("boundary") {
  TEST_CASE("Thoma points") {
    const ThomaPoint w({R(1, 2)}, {R(1, 4)});
    CHECK(w.gamma() == R(1, 4));
    CHECK_THROWS_AS(ThomaPoint({R(1, 4), R(1, 2)}), ParameterError);
    CHECK_THROWS_AS(ThomaPoint({R(3, 4)}, {R(1, 2)}), ParameterError);
    CHECK_THROWS_AS(ThomaPoint({R(-1, 4)}), ParameterError);
  }

  TEST_CASE("embeddings") {
    CHECK(embed_rows(Partition{3, 1}, 4) == std::vector<Rational>{R(3, 4), R(1, 4)});
    CHECK(embed_rows(Partition{5}, 5) == std::vector<Rational>{1});
    const ThomaPoint f = embed_frobenius(Partition{2, 1}, 3);
    CHECK(f.alpha == std::vector<Rational>{R(1, 2)});
    CHECK(f.beta == std::vector<Rational>{R(1, 2)});
  }

  TEST_CASE("Dirichlet integrals") {
    CHECK(dirichlet_integral({1, 1}) == R(1, 2));
    CHECK(dirichlet_integral({2, 2}) == R(1, 12));
    CHECK(dirichlet_integral({1, 1, 1}) == R(1, 12));
    // Full simplex: a^1 b^1 over the segment = 1/6; with 1/(a+b) = 1 on it.
    CHECK(simplex_integral({1, 1}) == R(1, 6));
    CHECK(simplex_integral({1, 1}, {{0, 1}}) == R(1, 6));
    // int a b c / (a + b) over the 2-simplex; a = s u gives int u(1-u) * int s^2 (1-s) = 1/6 * 1/12.
    CHECK(simplex_integral({1, 1, 1}, {{0, 1}}) == R(1, 72));
  }

  TEST_CASE("densities") {
    const DensitySpec y = DensitySpec::make(BoundaryKind::Young, Partition{1, 1});
    CHECK(y.constant == 60);
    CHECK(density(y, {R(3, 4), R(1, 4)}) == R(45, 16));
    CHECK(density(y, {R(3, 4)}) == R(45, 16));  // last coordinate completed
    CHECK(density(y, {R(1, 2), R(1, 2)}) == 0);  // collision
    CHECK_THROWS(density(y, {R(1, 4), R(3, 4)}));  // not ordered
    CHECK_THROWS(density(y, {R(3, 4), R(1, 2)}));  // sum != 1
    CHECK_THROWS(density(y, {R(5, 4), R(-1, 4)}));
    // 60 * a1 a2 (a1^2 - a2^2) * (a1 - a2)/(a1 + a2) at (2/3, 1/3)
    const DensitySpec s = DensitySpec::make(BoundaryKind::Schur, Partition{3, 1});
    CHECK(density(s, {R(2, 3), R(1, 3)}) == R(40, 27));
    // 12 * m_(2,1)
    const DensitySpec k = DensitySpec::make(BoundaryKind::Kingman, Partition{2, 1});
    CHECK(density(k, {R(2, 3), R(1, 3)}) == R(8, 3));
    CHECK_THROWS_AS(DensitySpec::make(BoundaryKind::Young, Partition{1, 1, 1, 1, 1, 1}), UnsupportedError);
  }

  TEST_CASE("integral identities: hand-checked instances") {
    SelbergReport r = selberg_verify(BoundaryKind::Young, Partition{1, 1}, Partition{1});
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(r.equal);
    r = selberg_verify(BoundaryKind::Kingman, Partition{1, 1}, Partition());
    CHECK(r.rhs == 1);
    // int_{1/2}^{1} 12 a (1-a) (a^2 + (1-a)^2) da
    r = selberg_verify(BoundaryKind::Kingman, Partition{1, 1}, Partition{2});
    CHECK(r.rhs == R(3, 5));
    CHECK(r.equal);
    CHECK(selberg_verify(BoundaryKind::Young, Partition{2, 1}, Partition{1, 1}).equal);
    CHECK(selberg_verify(BoundaryKind::Young, Partition{3, 2, 1}, Partition{1, 1}).equal);
    CHECK(selberg_verify(BoundaryKind::Young, Partition{3, 2}, Partition{2, 1}).equal);
    CHECK(selberg_verify(BoundaryKind::Schur, Partition{2, 1}, Partition{2, 1}).equal);
    CHECK(selberg_verify(BoundaryKind::Schur, Partition{3, 1}, Partition()).rhs == 1);
    CHECK(selberg_verify(BoundaryKind::Gamma, Partition{2, 1}, Partition()).rhs == 1);
    CHECK(selberg_verify(BoundaryKind::Gamma, Partition{3, 3, 1}, Partition{2, 2}).equal);
    // Kernel of length > l integrates to zero.
    CHECK(selberg_verify(BoundaryKind::Young, Partition{2, 1}, Partition{1, 1, 1}).rhs == 0);
    CHECK_THROWS_AS(selberg_verify(BoundaryKind::Schur, Partition{3, 2, 1}, Partition{2}), UnsupportedError);
  }

  TEST_CASE("integral identities: sweep") {
    for (const Partition& lam : partitions_up_to(5, GraphKind::young(), 3)) {
      if (lam.length() < 2) continue;
      for (const Partition& mu : partitions_up_to(4, GraphKind::young(), lam.length())) {
        CHECK(selberg_verify(BoundaryKind::Young, lam, mu, 2).equal);
        CHECK(selberg_verify(BoundaryKind::Kingman, lam, mu).equal);
      }
    }
  }

  TEST_CASE("kernels: power-sum specialization") {
    // p_1 -> 1, p_k -> sum a^k + (-1)^(k-1) sum b^k.
    const ThomaPoint w({R(1, 2)}, {R(1, 4)});  // p2 = 3/16, p3 = 9/64
    CHECK(young_kernel(Partition{1}, w) == 1);
    CHECK(young_kernel(Partition{2}, w) == R(19, 32));
    CHECK(young_kernel(Partition{1, 1}, w) == R(13, 32));
    CHECK(young_kernel(Partition{2, 1}, w) == R(55, 192));
    CHECK(young_kernel(Partition{1, 1}, ThomaPoint({R(1)})) == 0);
    const ThomaPoint k({R(1, 2), R(1, 4)});  // p2 = 5/16, p3 = 9/64
    CHECK(kingman_kernel(Partition{1}, k) == 1);
    CHECK(kingman_kernel(Partition{2}, k) == R(5, 16));
    CHECK(kingman_kernel(Partition{1, 1}, k) == R(11, 32));
    CHECK(kingman_kernel(Partition{2, 1}, k) == R(11, 64));
    CHECK(kingman_kernel(Partition{2}, ThomaPoint({R(1, 2), R(1, 2)})) == R(1, 2));
    CHECK_THROWS(kingman_kernel(Partition{2}, w));
  }

  TEST_CASE("kernels are harmonic") {
    const ThomaPoint w({R(1, 3), R(1, 5)}, {R(1, 4)});
    CHECK(check_harmonicity([&](const Partition& mu) { return young_kernel(mu, w); }, GraphKind::young(), 6).harmonic());
    const ThomaPoint k({R(2, 5), R(1, 7)});
    CHECK(check_harmonicity([&](const Partition& mu) { return kingman_kernel(mu, k); }, GraphKind::kingman(), 6)
              .harmonic());
  }

  TEST_CASE("convergence experiment") {
    ConvergenceOptions o;
    o.keep_points = true;
    const ConvergenceReport r = convergence_experiment(HarmonicFamily::parse("trunc-young:lambda=2+1"), {60, 120, 240}, o);
    REQUIRE(r.levels.size() == 3);
    for (const auto& lv : r.levels) {
      CHECK(lv.total == 1);
      CHECK(lv.interior > 0);
      CHECK(static_cast<int>(lv.points.size()) == lv.n / 2 + 1);
    }
    CHECK(r.distance_pass);
    CHECK(r.levels[2].worst_ratio_error < r.levels[0].worst_ratio_error);
    const ConvergenceReport k = convergence_experiment(HarmonicFamily::parse("trunc-kingman:lambda=1+1"), {100, 200});
    CHECK(k.levels[1].total == 1);
    CHECK(k.distance_pass);
    CHECK_THROWS_AS(convergence_experiment(HarmonicFamily::parse("gamma-shaped:lambda=2+1"), {10}), UnsupportedError);
    CHECK_THROWS_AS(convergence_experiment(HarmonicFamily::parse("schur:t=3"), {10}), ParameterError);
  }
}
