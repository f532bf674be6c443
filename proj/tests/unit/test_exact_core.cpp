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

#include <algorithm>
#include <numeric>
#include <random>

#include "mgraph/bigfloat.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/gauss.hpp"
#include "mgraph/matrix.hpp"
#include "mgraph/poly.hpp"
#include "mgraph/rational.hpp"
#include "mgraph/series.hpp"
#include "mgraph/special.hpp"

using namespace mgraph;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Leibniz formula; exponential but independent of elimination.
Rational leibniz_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> w(n);
  std::iota(w.begin(), w.end(), 0);
  Rational total;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += w[i] > w[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, w[i]);
    total += term;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

// Sum over perfect matchings with crossing signs.
Rational matching_pfaffian(const RationalMatrix& m, std::vector<int> free_idx) {
  if (free_idx.empty()) return 1;
  const int i = free_idx[0];
  Rational total;
  for (std::size_t k = 1; k < free_idx.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t r = 1; r < free_idx.size(); ++r)
      if (r != k) rest.push_back(free_idx[r]);
    const Rational s = (k % 2) ? 1 : -1;
    total += s * m(i, free_idx[k]) * matching_pfaffian(m, rest);
  }
  return total;
}

RationalMatrix random_matrix(std::mt19937& g, std::size_t n, bool skew) {
  std::uniform_int_distribution<int> num(-7, 7), den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = skew ? i + 1 : 0; j < n; ++j) {
      m(i, j) = R(num(g), den(g));
      if (skew) m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace

TEST_SUITE("exact_core") {
  TEST_CASE("rational parsing and canonical form") {
    CHECK(Rational::parse("-6/4") == R(-3, 2));
    CHECK_THROWS_AS(Rational::parse("6/-4"), ParseError);
    CHECK(Rational::parse("-7") == R(-7));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(R(1) / R(0), std::domain_error);
    CHECK(R(1, 3) + R(1, 6) == R(1, 2));
    CHECK(R(-2, 3).abs() == R(2, 3));
    CHECK(R(2, 3).pow(-2) == R(9, 4));
    CHECK(R(-7, 2).floor() == -4);
    CHECK(R(1, 3) < R(1, 2));
  }

  TEST_CASE("determinant") {
    CHECK(det(RationalMatrix{{R(5, 3)}}) == R(5, 3));
    CHECK(det(RationalMatrix{{6, 2}, {2, 1}}) == 2);
    CHECK(det(RationalMatrix{{1, 2, 3}, {4, 5, 6}, {1, 2, 3}}) == 0);
    CHECK_THROWS_AS(det(RationalMatrix(2, 3)), ShapeError);

    std::mt19937 g(7);
    for (std::size_t n = 1; n <= 6; ++n)
      for (int rep = 0; rep < 3; ++rep) {
        const RationalMatrix m = random_matrix(g, n, false);
        CHECK(det(m) == leibniz_det(m));
      }
  }

  TEST_CASE("determinant is multiplicative") {
    std::mt19937 g(11);
    const RationalMatrix a = random_matrix(g, 5, false), b = random_matrix(g, 5, false);
    CHECK(det(a * b) == det(a) * det(b));
    CHECK(det(a.transpose()) == det(a));
  }

  TEST_CASE("pfaffian base cases") {
    const Rational a = R(3, 7);
    CHECK(pfaffian(RationalMatrix{{0, a}, {-a, 0}}) == a);
    // e12 e34 - e13 e24 + e14 e23
    RationalMatrix m(4, 4);
    const Rational e[4][4] = {{0, 2, 3, 5}, {0, 0, 7, 11}, {0, 0, 0, 13}, {0, 0, 0, 0}};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        m(i, j) = e[i][j];
        m(j, i) = -e[i][j];
      }
    CHECK(pfaffian(m) == 2 * 13 - 3 * 11 + 5 * 7);
    CHECK(pfaffian(RationalMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(pfaffian(RationalMatrix(3, 3)), ShapeError);
    CHECK_THROWS_AS(pfaffian(RationalMatrix{{0, 1}, {1, 0}}), ShapeError);
  }

  TEST_CASE("pfaffian of the (mu_i - mu_j)/(mu_i + mu_j) matrix") {
    const int mu[4] = {3, 2, 1, 0};
    RationalMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) m(i, j) = R(mu[i] - mu[j], mu[i] + mu[j]);
    CHECK(pfaffian(m) == R(1, 5) * R(2, 4) * R(1, 3));
  }

  TEST_CASE("pfaffian routes agree with matchings and Pf^2 = det") {
    std::mt19937 g(3);
    for (std::size_t n = 2; n <= 8; n += 2)
      for (int rep = 0; rep < 3; ++rep) {
        const RationalMatrix m = random_matrix(g, n, true);
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        const Rational oracle = matching_pfaffian(m, idx);
        CHECK(pfaffian_expansion(m) == oracle);
        CHECK(pfaffian_elimination(m) == oracle);
        CHECK(oracle * oracle == det(m));
      }
    // Elimination must pivot past a zero leading entry.
    RationalMatrix z(4, 4);
    z(0, 2) = 1, z(2, 0) = -1, z(1, 3) = 2, z(3, 1) = -2;
    CHECK(pfaffian_elimination(z) == -2);
  }

  TEST_CASE("linear solve") {
    const std::vector<Rational> b = {1, R(2, 3), -5};
    CHECK(solve_linear(RationalMatrix::identity(3), b) == b);
    const RationalMatrix a{{0, 2, 1}, {1, 1, 0}, {3, 0, R(1, 2)}};
    const auto x = solve_linear(a, b);
    CHECK(a * x == b);
    CHECK_THROWS_AS(solve_linear(RationalMatrix{{1, 2}, {2, 4}}, {1, 1}), SingularMatrixError);
  }

  TEST_CASE("special functions") {
    CHECK(pochhammer(R(3, 2), 1) == R(3, 2));
    CHECK(falling_factorial(R(-4), 2) == 20);
    for (int n = 0; n <= 10; ++n) CHECK(pochhammer(R(1), n) == factorial(n));
    CHECK(pochhammer(R(-2), 3) == 0);
    CHECK(binomial(10, 3) == 120);
    const auto s = stirling2_table(6);
    CHECK(s[6][3] == 90);
    CHECK(s[5][2] == 15);
  }

  TEST_CASE("polynomials and rational functions") {
    const Polynomial x = Polynomial::x();
    const Polynomial p = (x - Polynomial(1)) * (x + Polynomial(2));
    CHECK(p(R(1)) == 0);
    CHECK(p.degree() == 2);
    auto [q, r] = p.divmod(x - Polynomial(1));
    CHECK(q == x + Polynomial(2));
    CHECK(r.is_zero());
    const RationalFunction f(p, (x - Polynomial(1)) * (x - Polynomial(3)));
    CHECK(f.den() == x - Polynomial(3));  // common factor removed
    CHECK(f(R(1)) == R(-3, 2));           // removable point evaluates to its limit
    CHECK_THROWS_AS(f(R(3)), ParameterError);
  }

  TEST_CASE("series in the falling basis") {
    const Polynomial u = Polynomial::x();
    // 1 is all zero.
    for (const Rational& g : extract_series_coeffs(RationalFunction(Polynomial(1)), 5)) CHECK(g == 0);
    // (u+2)/u = 1 + 2/u
    const auto g = extract_series_coeffs(RationalFunction(u + Polynomial(2), u), 4);
    CHECK(g == std::vector<Rational>{2, 0, 0, 0});
    // (u+1)/u at lambda = (1): h*_1 = 1, the rest vanish.
    CHECK(h_star_values({1}, 4) == std::vector<Rational>{1, 0, 0, 0});
    // Re-substitution: f(u) = 1 + sum g_m/(u|m) at a sample u.
    const RationalFunction f(u * u + Polynomial(R(1, 2)) * u + Polynomial(5), (u - Polynomial(1)) * (u + Polynomial(3)));
    const auto c = extract_series_coeffs(f, 12);
    const Rational at = 200;
    Rational sum = 1;
    for (int m = 1; m <= 12; ++m) sum += c[m - 1] / falling_factorial(at, m);
    // The factorial series converges slowly; at u = 200 twelve terms give ~18 digits.
    CHECK(((sum - f(at)).abs() < R(1, 1000000000000000)));
  }

  TEST_CASE("super h* values") {
    CHECK(super_h_star_values({{R(1, 2)}, {R(1, 2)}}, 3) == h_star_values({1}, 3));
    CHECK(super_h_star_values({{R(3, 2)}, {R(1, 2)}}, 3) == h_star_values({2}, 3));
    for (const Rational& v : super_h_star_values({}, 3)) CHECK(v == 0);
  }

  TEST_CASE("bigfloat") {
    const BigFloat a = BigFloat::parse("1.5@200");
    CHECK(a.precision() == 200);
    CHECK(BigFloat::parse(a.str()) == a);
    CHECK(BigFloat(R(1, 3)).precision() == 128);
    CHECK((BigFloat(R(1, 3)) * BigFloat(R(3))) == BigFloat(R(1)));
    CHECK(BigFloat::parse("1e-20") < BigFloat(R(1, 1000000)));
    CHECK_THROWS_AS(BigFloat::parse("abc"), ParseError);
    CHECK(BigFloat::gamma(BigFloat(R(5))) == BigFloat(R(24)));
  }

  TEST_CASE("Gauss summation against an independent high-precision value") {
    // 2F1(1/2, 1/3; 6; 1) and 2F1(2/3, -1/5; 9/2; 1), 45 digits, computed
    // with a separate arbitrary precision package.
    const BigFloat tol = BigFloat::parse("1e-30");
    const GaussReport g1 = gauss_2f1_report(R(1, 2), R(1, 3), R(6), BigFloat::parse("1e-20"));
    CHECK(g1.pass);
    CHECK((g1.closed_form - BigFloat::parse("1.03326129487767065781092365345524948715893153")).abs() < tol);
    const GaussReport g2 = gauss_2f1_report(R(2, 3), R(-1, 5), R(9, 2), BigFloat::parse("1e-20"));
    CHECK(g2.pass);
    CHECK((g2.closed_form - BigFloat::parse("0.965322455588283444985000870245442215000351665")).abs() < tol);
    // Terminating series: exact.
    const GaussReport g3 = gauss_2f1_report(R(-3), R(5, 2), R(7), BigFloat::parse("1e-20"));
    CHECK(g3.terminating);
    CHECK(g3.pass);
    // a = 0: the series is 1.
    CHECK(gauss_2f1_report(R(0), R(1, 2), R(3), BigFloat::parse("1e-20")).partial_sum == BigFloat(R(1)));
  }
}
