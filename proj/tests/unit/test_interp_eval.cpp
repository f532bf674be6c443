#include <doctest.h>

#include <random>

#include "mgraph/enumerate.hpp"
#include "mgraph/functional.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/harmonic.hpp"
#include "mgraph/pstar.hpp"
#include "mgraph/special.hpp"
#include "mgraph/symmetric.hpp"
#include "support/pstar_oracle.hpp"

using namespace mgraph;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

// Distinct nonzero coordinates so the symmetrization oracle is defined.
Point random_distinct_point(std::mt19937& g, int k) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  Point x;
  while (static_cast<int>(x.size()) < k) {
    const Rational v(num(g), den(g));
    bool ok = !v.is_zero();
    for (const Rational& y : x) ok = ok && y != v && y != -v;
    if (ok) x.push_back(v);
  }
  return x;
}

}  // namespace

TEST_SUITE("interp_eval") {
  TEST_CASE("Schur functions") {
    // Values from a computer algebra system (bialternant in three variables).
    CHECK(schur_eval(Partition{2, 1}, {1, 2, 3}) == 60);
    CHECK(schur_eval(Partition{3, 1, 1}, {R(1, 2), -1, 3}) == R(-99, 8));
    CHECK(schur_eval(Partition{1, 1}, {R(1, 2), R(1, 3)}) == R(1, 6));
    CHECK(schur_eval(Partition{1, 1, 1}, {1, 2}) == 0);
    // Repeated coordinates fall back to tableaux.
    CHECK(schur_eval(Partition{2}, {1, 1, 1}) == 6);
    std::mt19937 g(5);
    for (const Partition& mu : partitions_up_to(5, GraphKind::young())) {
      const Point x = random_distinct_point(g, 3);
      CHECK(schur_eval_tableau(mu, x) == schur_eval_bialternant(mu, x));
    }
  }

  TEST_CASE("shifted Schur functions") {
    CHECK(shifted_schur_eval(Partition{2, 1}, {3, 1, 0}) == 8);
    CHECK(shifted_schur_eval(Partition{2, 1}, {R(1, 2), R(-2, 3), 5}) == R(683, 36));
    CHECK(shifted_schur_eval(Partition{1, 1}, {2, 1}) == 3);
    std::mt19937 g(9);
    for (const Partition& mu : partitions_up_to(5, GraphKind::young())) {
      Point x = random_distinct_point(g, 4);
      // The determinant route needs the shifted coordinates x_i - i distinct.
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += Rational(7 * static_cast<long>(i), 11);
      CHECK(shifted_schur_eval_det(mu, x) == shifted_schur_eval_tableau(mu, x));
    }
  }

  TEST_CASE("dimension ratio against path counts") {
    // dim(mu, lambda) / dim(lambda) from brute-force path counting.
    auto ratio = [](const Partition& mu, const Partition& lam) {
      const int n = mu.size(), N = lam.size();
      return shifted_schur_eval(mu, point_of(lam)) / falling_factorial(Rational(N), n);
    };
    CHECK(ratio(Partition{1, 1}, Partition{3, 2, 1}) == R(1, 2));
    CHECK(ratio(Partition{2, 1}, Partition{2, 1}) == R(1, 2));
    CHECK(ratio(Partition{1, 1}, Partition{2, 1}) == R(1, 2));
    CHECK(ratio(Partition{2, 1}, Partition{3, 2}) == R(2, 5));
  }

  TEST_CASE("monomials and factorial monomials") {
    CHECK(monomial_eval(Partition{2, 1}, {1, 2, 3}) == 1 * 2 + 1 * 3 + 4 * 1 + 4 * 3 + 9 * 1 + 9 * 2);
    CHECK(factorial_monomial_eval(Partition{2}, {1, 1}) == 0);
    CHECK(factorial_monomial_eval(Partition{2}, {3}) == 6);
    CHECK(distinct_exponent_vectors(Partition{2, 1}, 3).size() == 6);
    CHECK(distinct_exponent_vectors(Partition{1, 1}, 3).size() == 3);
    CHECK(distinct_exponent_vectors(Partition{1, 1, 1, 1}, 3).empty());
  }

  TEST_CASE("interpolation vanishing") {
    const auto all = partitions_up_to(6, GraphKind::young());
    for (const Partition& mu : all)
      for (const Partition& lam : all)
        if (lam.size() <= mu.size() && lam != mu) {
          CHECK(shifted_schur_eval(mu, point_of(lam)) == 0);
          CHECK(factorial_monomial_eval(mu, point_of(lam)) == 0);
        }
    for (const Partition& mu : partitions_up_to(6, GraphKind::schur()))
      for (const Partition& lam : partitions_up_to(6, GraphKind::schur()))
        if (lam.size() <= mu.size() && lam != mu) CHECK(pstar_eval(StrictPartition(mu), point_of(lam)) == 0);
    CHECK(pstar_eval(StrictPartition{2}, Point{1}) == 0);
  }

  TEST_CASE("P* Pfaffian pipeline against symmetrization") {
    std::mt19937 g(17);
    for (int rep = 0; rep < 3; ++rep) {
      const Point x = random_distinct_point(g, 4);
      for (const Partition& mu : partitions_up_to(6, GraphKind::schur(), 4))
        CHECK(pstar_eval(StrictPartition(mu), x) == testing::pstar_symmetrized(mu, x));
    }
  }

  TEST_CASE("two-row seeds") {
    std::mt19937 g(23);
    const Point x = random_distinct_point(g, 4);
    const auto v = pstar_one_row_values(x, 12);
    const TwoRowTable t(v);
    auto one = [&](int m) { return t(m, 0); };
    for (int p = 2; p <= 6; ++p) CHECK(t(p, 1) == one(p) * one(1) - p * one(p) - one(p + 1));
    // The seed without the P*_(p+1) term is wrong in general.
    CHECK(t(2, 1) != one(2) * one(1) - 2 * one(2));
    for (int p = 1; p <= 5; ++p)
      for (int q = 0; q < p; ++q) CHECK(t(q, p) == -t(p, q));
    CHECK(pstar_two_row(v, 4, 2) == t(4, 2));
  }

  TEST_CASE("generator basis") {
    auto basis = GeneratorBasis::get(5);
    // h*_m = s*_(m) expands to itself.
    const auto& e = basis->shifted_schur(Partition{3});
    REQUIRE(e.size() == 1);
    CHECK(e[0].first == Partition{3});
    CHECK(e[0].second == 1);
    // Evaluation functionals reproduce the determinant route.
    std::mt19937 g(29);
    const Point x = random_distinct_point(g, 3);
    const FunctionalSpec ev = FunctionalSpec::evaluation(x, 5);
    for (const Partition& mu : partitions_up_to(5, GraphKind::young()))
      CHECK(apply_functional(basis->shifted_schur(mu), ev) == shifted_schur_eval(mu, x));
    // Generic target values.
    std::map<Partition, Rational> target;
    for (const Partition& lam : partitions_up_to(3, GraphKind::young()))
      target[lam] = shifted_schur_eval(Partition{2, 1}, point_of(lam));
    const auto coeffs = express_in_generator_basis(target, 3);
    CHECK(apply_functional(coeffs, FunctionalSpec::evaluation(x, 3)) == shifted_schur_eval(Partition{2, 1}, x));
    CHECK_THROWS_AS(basis->shifted_schur(Partition{6}), std::out_of_range);
  }

  TEST_CASE("Young functional equals the content product") {
    for (const auto& [e, t] : std::vector<std::pair<Rational, Rational>>{{3, 2}, {R(1, 2), R(-7, 3)}}) {
      const FunctionalSpec spec = FunctionalSpec::young_zz(e, t, 6);
      CHECK(spec.g(1) == -t);
      for (const Partition& mu : partitions_up_to(6, GraphKind::young())) {
        Rational closed = mu.size() % 2 ? -1 : 1;
        for (const Box& b : mu.boxes()) {
          const Rational c = mu.content(b);
          closed *= (t + c * e + c * c) / Rational(mu.hook(b));
        }
        CHECK(apply_functional(GeneratorBasis::get(6)->shifted_schur(mu), spec) == closed);
      }
    }
    // t = 0: every generator vanishes.
    const FunctionalSpec zero = FunctionalSpec::young_zz(1, 0, 4);
    for (int m = 1; m <= 4; ++m) CHECK(zero.g(m) == 0);
  }

  TEST_CASE("Schur functional") {
    const Rational t = R(5, 2);
    const FunctionalSpec spec = FunctionalSpec::schur_t(t, 8);
    CHECK(spec.g(1) == -t);
    // pi_t(P*_(1)) = -t and the one-row value (-1)^m prod(2t + (j-1)j) / (2 m!).
    CHECK(pstar_eval(StrictPartition{1}, spec) == -t);
    CHECK(pstar_eval(StrictPartition{2}, spec) == (2 * t) * (2 * t + 2) / 4);
    // The staircase (k-1, ..., 1) at t = k(1-k)/2.
    for (int k = 2; k <= 4; ++k) {
      Point x;
      for (int i = k - 1; i >= 1; --i) x.emplace_back(i);
      const FunctionalSpec st = FunctionalSpec::schur_t(Rational(k * (1 - k), 2), 6);
      for (const Partition& mu : partitions_up_to(6, GraphKind::schur()))
        CHECK(pstar_eval(StrictPartition(mu), st) == pstar_eval(StrictPartition(mu), x));
    }
    // With (k, ..., 1) the identity already fails for k = 2.
    CHECK(pstar_eval(StrictPartition{1}, FunctionalSpec::schur_t(-1, 2)) == 1);
    CHECK(pstar_eval(StrictPartition{1}, Point{2, 1}) == 3);
  }

  TEST_CASE("extrapolated phi matches the families") {
    const Rational e = 3, t = 2;
    const HarmonicFamily young(YoungZZ{e, t});
    const FunctionalSpec ys = FunctionalSpec::young_zz(e, t, 6);
    for (const Partition& mu : partitions_up_to(6, GraphKind::young()))
      CHECK(extrapolated_phi(ys, mu) == young.phi(mu));
    const HarmonicFamily schur(SchurT{R(7, 3)});
    const FunctionalSpec ss = FunctionalSpec::schur_t(R(7, 3), 7);
    for (const Partition& mu : partitions_up_to(7, GraphKind::schur())) CHECK(extrapolated_phi(ss, mu) == schur.phi(mu));
  }

  TEST_CASE("Pieri rules under evaluation") {
    std::mt19937 g(31);
    const Point x = random_distinct_point(g, 4);
    for (const Partition& mu : partitions_up_to(5, GraphKind::young())) {
      Rational rs = mu.size() * shifted_schur_eval(mu, x), rm = mu.size() * factorial_monomial_eval(mu, x);
      for (const Partition& lam : covers_up(mu, GraphKind::young())) rs += shifted_schur_eval(lam, x);
      for (const Partition& lam : covers_up(mu, GraphKind::kingman()))
        rm += edge_multiplicity(mu, lam, GraphKind::kingman()) * factorial_monomial_eval(lam, x);
      CHECK(shifted_schur_eval(mu, x) * shifted_schur_eval(Partition{1}, x) == rs);
      CHECK(factorial_monomial_eval(mu, x) * factorial_monomial_eval(Partition{1}, x) == rm);
    }
    for (const Partition& mu : partitions_up_to(5, GraphKind::schur())) {
      const StrictPartition s(mu);
      Rational r = mu.size() * pstar_eval(s, x);
      for (const Partition& lam : covers_up(mu, GraphKind::schur())) r += pstar_eval(StrictPartition(lam), x);
      CHECK(pstar_eval(s, x) * pstar_eval(StrictPartition{1}, x) == r);
    }
  }
}
