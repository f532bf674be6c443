#include <doctest.h>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/family.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/harmonic.hpp"
#include "mgraph/special.hpp"

using namespace mgraph;

namespace {
Rational R(long p, long q = 1) { return Rational(p, q); }
}  // namespace

TEST_SUITE("harmonic") {
  TEST_CASE("family specs") {
    CHECK(HarmonicFamily::parse("young-zz:e=3,t=2").str() == "young-zz:e=3,t=2");
    CHECK(HarmonicFamily::parse("kingman:t=1,alpha=1/2").graph() == GraphKind::kingman());
    CHECK(HarmonicFamily::parse("schur:t=3").graph() == GraphKind::schur());
    CHECK(HarmonicFamily::parse("jack:e=3,t=2,theta=1/2").graph() == GraphKind::jack(R(1, 2)));
    CHECK(HarmonicFamily::parse("trunc-young:lambda=2+1").max_length() == 2);
    CHECK(HarmonicFamily::parse("gamma-shaped:frobenius=(2,1|2,0)").degree_cap() == 8);
    CHECK(HarmonicFamily::parse("gamma-shaped:lambda=3+3+1,cap=6").degree_cap() == 6);
    CHECK(HarmonicFamily::parse("trunc-schur:lambda=3+1").is_truncated());
    CHECK_THROWS_AS(HarmonicFamily::parse("young-zz:e=3"), ParseError);
    CHECK_THROWS_AS(HarmonicFamily::parse("nosuch:t=1"), ParseError);
    CHECK_THROWS_AS(HarmonicFamily::parse("young-zz:e=3,t=0"), ParameterError);
    CHECK_THROWS_AS(HarmonicFamily::parse("young-zz:e=3,t=-2"), ParameterError);
    CHECK_THROWS_AS(HarmonicFamily::parse("jack:e=1,t=1,theta=0"), ParameterError);
    CHECK_THROWS_AS(HarmonicFamily::parse("trunc-young:lambda=3"), ParameterError);
  }

  TEST_CASE("phi at the first levels") {
    for (const char* s : {"young-zz:e=3,t=2", "jack:e=3,t=2,theta=1/2", "kingman:t=1,alpha=1/2", "schur:t=3",
                          "trunc-young:lambda=2+1", "gamma-shaped:lambda=2+1", "trunc-kingman:lambda=1+1",
                          "trunc-schur:lambda=3+1"}) {
      const HarmonicFamily f = HarmonicFamily::parse(s);
      CHECK(f.phi(Partition()) == 1);
      CHECK(f.phi(Partition{1}) == 1);
    }
    // z = 1, z' = 2: the box of content -1 gives z + c = 0.
    CHECK(HarmonicFamily::parse("young-zz:e=3,t=2").phi(Partition{2, 1}) == 0);
    // (z)_2 (z')_2 / (zz')_2 / h = (1*2)(2*3)/(2*3)/2
    CHECK(HarmonicFamily::parse("young-zz:e=3,t=2").phi(Partition{2}) == 1);
    // Truncated families vanish beyond their support.
    CHECK(HarmonicFamily::parse("trunc-young:lambda=2+1").phi(Partition{1, 1, 1}) == 0);
    CHECK(HarmonicFamily::parse("trunc-kingman:lambda=1+1").phi(Partition{1, 1, 1}) == 0);
  }

  TEST_CASE("truncated families: support and positivity") {
    for (const char* spec : {"trunc-young:lambda=3+2+1", "trunc-kingman:lambda=2+1", "trunc-schur:lambda=4+2+1"}) {
      const HarmonicFamily f = HarmonicFamily::parse(spec);
      for (const Partition& mu : partitions_up_to(6, f.graph())) {
        if (mu.length() > *f.max_length())
          CHECK(f.phi(mu) == 0);
        else
          CHECK_MESSAGE(f.phi(mu) > 0, spec);
      }
    }
  }

  TEST_CASE("harmonicity") {
    for (const char* s : {"young-zz:e=3,t=2", "jack:e=3,t=2,theta=1/2", "kingman:t=1,alpha=1/2", "kingman:t=0,alpha=1/3",
                          "trunc-young:lambda=2+2", "trunc-kingman:lambda=2+1", "trunc-schur:lambda=3+1",
                          "gamma-shaped:lambda=2+1,cap=6"}) {
      const HarmonicFamily f = HarmonicFamily::parse(s);
      const HarmonicityReport h = check_harmonicity(f, 6);
      CHECK_MESSAGE(h.harmonic(), s);
      CHECK(h.vertices_checked > 0);
    }
    CHECK(check_harmonicity(HarmonicFamily::parse("schur:t=3"), 10).harmonic());
    CHECK(check_harmonicity(HarmonicFamily::parse("young-zz:e=3,t=2"), 8, 2).harmonic());
    CHECK_THROWS(check_harmonicity(HarmonicFamily::parse("gamma-shaped:lambda=2+1,cap=4"), 6));
  }

  TEST_CASE("harmonicity detector localizes a corrupted value") {
    const HarmonicFamily f = HarmonicFamily::parse("young-zz:e=1,t=5/4");
    auto bad = [&](const Partition& mu) { return mu == Partition{2, 1} ? f.phi(mu) + 1 : f.phi(mu); };
    const HarmonicityReport h = check_harmonicity(bad, GraphKind::young(), 5);
    std::vector<Partition> at;
    for (const auto& v : h.violations) at.push_back(v.mu);
    std::sort(at.begin(), at.end());
    CHECK(at == std::vector<Partition>{Partition{1, 1}, Partition{2}, Partition{2, 1}});
  }

  TEST_CASE("positivity") {
    CHECK(check_harmonicity(HarmonicFamily::parse("schur:t=3"), 8).nonnegative());
    const HarmonicityReport h = check_harmonicity(HarmonicFamily::parse("schur:t=-1"), 4);
    CHECK(h.harmonic());
    REQUIRE_FALSE(h.nonnegative());
    CHECK(h.negatives.front().first == Partition{2, 1});
    CHECK(h.negatives.front().second == R(-1, 3));
  }

  TEST_CASE("level measures") {
    const LevelMeasure one = level_measure(HarmonicFamily::parse("young-zz:e=3,t=2"), 1);
    REQUIRE(one.mass.size() == 1);
    CHECK(one.mass[0].second == 1);
    // Ewens distribution with parameter 2 on partitions of 3.
    const LevelMeasure ew = level_measure(HarmonicFamily::parse("kingman:t=2,alpha=0"), 3);
    REQUIRE(ew.mass.size() == 3);
    CHECK(ew.mass[0] == std::pair{Partition{3}, R(1, 6)});
    CHECK(ew.mass[1] == std::pair{Partition{2, 1}, R(1, 2)});
    CHECK(ew.mass[2] == std::pair{Partition{1, 1, 1}, R(1, 3)});
    // Support of a truncated family.
    for (const auto& [nu, m] : level_measure(HarmonicFamily::parse("trunc-young:lambda=1+1"), 5).mass)
      if (nu.length() > 2) CHECK(m == 0);
    for (const char* s : {"jack:e=1,t=5/4,theta=2", "schur:t=1/2", "trunc-schur:lambda=4+2+1", "kingman:t=-1/4,alpha=1/2"})
      for (int n = 1; n <= 7; ++n) CHECK(level_measure(HarmonicFamily::parse(s), n, 2).total() == 1);
  }

  TEST_CASE("admissibility") {
    CHECK(admissible(HarmonicFamily::parse("young-zz:e=1,t=5/4")).admissible);
    CHECK(admissible(HarmonicFamily::parse("kingman:t=1,alpha=1/2")).admissible);
    CHECK_FALSE(admissible(HarmonicFamily::parse("kingman:t=-1,alpha=1/2")).admissible);
    CHECK_FALSE(admissible(HarmonicFamily::parse("schur:t=-1")).admissible);
    // Real z, z' in (m, m+1): e = 3/2 + 8/5, t = 3/2 * 8/5 (both in (1, 2)).
    CHECK(admissible(HarmonicFamily(YoungZZ{R(31, 10), R(12, 5)})).admissible);
    // z = 1/2, z' = 5/2: real, in different unit intervals.
    CHECK_FALSE(admissible(HarmonicFamily(YoungZZ{3, R(5, 4)})).admissible);
    // Integer z = 3, z' = 5: a finite family, not strictly positive.
    CHECK_FALSE(admissible(HarmonicFamily(YoungZZ{8, 15})).admissible);
    const Admissibility s = admissible(HarmonicFamily::parse("trunc-young:lambda=2+1"));
    CHECK(s.surrogate);
    CHECK(s.admissible);
  }

  TEST_CASE("Kingman pole surfaces at evaluation") {
    const HarmonicFamily f = HarmonicFamily::parse("kingman:t=-1,alpha=1/2");
    CHECK(f.phi(Partition{1}) == 1);
    CHECK_THROWS_AS(f.phi(Partition{2}), ParameterError);
  }

  TEST_CASE("lattice approximations") {
    const HarmonicFamily a = HarmonicFamily::parse("young-zz:e=1,t=5/4"), b = HarmonicFamily::parse("young-zz:e=3,t=3");
    for (const Partition& mu : {Partition(), Partition{1}, Partition{2}, Partition{1, 1}}) {
      Rational prev_j, prev_m;
      for (int n = mu.size() + 1; n <= 8; ++n) {
        const Rational j = lattice_bound_approx(a, b, mu, n, LatticeMode::Join);
        const Rational m = lattice_bound_approx(a, b, mu, n, LatticeMode::Meet);
        CHECK(j >= std::max(a.phi(mu), b.phi(mu)));
        CHECK(j <= a.phi(mu) + b.phi(mu));
        CHECK(m <= std::min(a.phi(mu), b.phi(mu)));
        CHECK(m >= 0);
        if (n > mu.size() + 1) {
          CHECK(j >= prev_j);
          CHECK(m <= prev_m);
        }
        prev_j = j;
        prev_m = m;
        CHECK(lattice_bound_approx(a, a, mu, n, LatticeMode::Join) == a.phi(mu));
        CHECK(lattice_bound_approx(b, b, mu, n, LatticeMode::Meet) == b.phi(mu));
      }
    }
    CHECK_THROWS_AS(lattice_bound_approx(a, b, Partition{2}, 2, LatticeMode::Join), ParameterError);
  }
}
