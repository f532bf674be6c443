#include <doctest.h>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/graph_kind.hpp"
#include "mgraph/partition.hpp"
#include "mgraph/special.hpp"

using namespace mgraph;

TEST_SUITE("partitions") {
  TEST_CASE("parsing and printing") {
    CHECK(Partition::parse("3+2+1") == Partition{3, 2, 1});
    CHECK(Partition::parse("[3,2,1]") == Partition{3, 2, 1});
    CHECK(Partition::parse("3,2,1") == Partition{3, 2, 1});
    CHECK(Partition::parse("()").empty());
    CHECK(Partition::parse("[]").empty());
    CHECK(Partition::parse("0").empty());
    CHECK(Partition{4, 1}.str() == "4+1");
    CHECK(Partition{4, 1}.json() == "[4,1]");
    CHECK(Partition::parse(Partition{5, 5, 2}.str()) == Partition{5, 5, 2});
    CHECK_THROWS_AS(Partition::parse("1+2"), ParseError);
    CHECK_THROWS_AS(Partition::parse("2+x"), ParseError);
    CHECK_THROWS_AS(StrictPartition::parse("2+2"), std::invalid_argument);
  }

  TEST_CASE("diagram statistics") {
    const Partition mu{4, 2, 1};
    CHECK(mu.size() == 7);
    CHECK(mu.conjugate() == Partition{3, 2, 1, 1});
    CHECK(mu.conjugate().conjugate() == mu);
    CHECK(mu.hook({1, 1}) == 6);
    CHECK(mu.hook({1, 2}) == 4);
    CHECK(mu.hook({2, 2}) == 1);
    CHECK(mu.content({3, 1}) == -2);
    CHECK(mu.depth() == 2);
    CHECK(Partition{3, 1, 1}.multiplicity(1) == 2);
    CHECK(Partition{3, 2}.contains(Partition{2, 2}));
    CHECK_FALSE(Partition{3, 2}.contains(Partition{1, 1, 1}));
  }

  TEST_CASE("Frobenius coordinates") {
    CHECK(FrobeniusCoords::of(Partition{1}) == FrobeniusCoords({0}, {0}));
    CHECK(FrobeniusCoords::of(Partition{2, 1}) == FrobeniusCoords({1}, {1}));
    CHECK(FrobeniusCoords::of(Partition{3, 3, 1}) == FrobeniusCoords({2, 1}, {2, 0}));
    CHECK(FrobeniusCoords::parse("(2,1|2,0)").to_partition() == Partition{3, 3, 1});
    CHECK(FrobeniusCoords::of(Partition{3, 3, 1}).str() == "(2,1|2,0)");
    for (const Partition& mu : partitions_up_to(8, GraphKind::young()))
      CHECK(FrobeniusCoords::of(mu).to_partition() == mu);
    CHECK_THROWS(FrobeniusCoords({1, 1}, {1, 0}));
  }

  TEST_CASE("shifted diagram") {
    const auto boxes = StrictPartition{3, 1}.shifted_boxes();
    CHECK(boxes.size() == 4);
    CHECK(boxes.back() == Box{2, 2});
  }

  TEST_CASE("covers") {
    const GraphKind Y = GraphKind::young(), K = GraphKind::kingman(), S = GraphKind::schur();
    for (const GraphKind& k : {Y, K, S, GraphKind::jack(Rational(1, 2))})
      CHECK(covers_up(Partition(), k) == std::vector<Partition>{Partition{1}});
    CHECK(covers_up(Partition{1}, Y) == std::vector<Partition>{Partition{2}, Partition{1, 1}});
    CHECK(covers_up(Partition{1}, S) == std::vector<Partition>{Partition{2}});
    CHECK(covers_down(Partition{2, 1}, Y) == std::vector<Partition>{Partition{1, 1}, Partition{2}});
    CHECK(covers_down(Partition{2}, S) == std::vector<Partition>{Partition{1}});
    CHECK(covers_down(Partition{1}, Y) == std::vector<Partition>{Partition()});
    // Up and down covers are mutually consistent.
    for (const Partition& mu : partitions_up_to(6, S))
      for (const Partition& lam : covers_up(mu, S)) {
        const auto down = covers_down(lam, S);
        CHECK(std::find(down.begin(), down.end(), mu) != down.end());
      }
  }

  TEST_CASE("level sizes") {
    // p(n) and the number of partitions into distinct parts.
    const int p[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    const int q[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15};
    for (int n = 0; n <= 12; ++n) {
      CHECK(level(n, GraphKind::young()).size() == static_cast<std::size_t>(p[n]));
      CHECK(level(n, GraphKind::schur()).size() == static_cast<std::size_t>(q[n]));
    }
    CHECK(level(4, GraphKind::schur()) == std::vector<Partition>{Partition{4}, Partition{3, 1}});
    CHECK(level(0, GraphKind::young()) == std::vector<Partition>{Partition()});
    CHECK(level(6, GraphKind::young(), 2).size() == 4);
    CHECK(partitions_up_to(4, GraphKind::young()).size() == 1 + 1 + 2 + 3 + 5);
  }

  TEST_CASE("reverse tableaux") {
    CHECK(reverse_tableaux(Partition{1}, 2).size() == 2);
    CHECK(reverse_tableaux(Partition{1, 1}, 2).size() == 1);
    CHECK(reverse_tableaux(Partition{2}, 1).size() == 1);
    CHECK(reverse_tableaux(Partition{1, 1}, 2)[0] == Filling{{2}, {1}});
    // Hook-content formula: s_mu(1^k) = prod (k + c(b)) / h(b).
    for (int k = 1; k <= 4; ++k)
      for (const Partition& mu : partitions_up_to(5, GraphKind::young())) {
        Rational hc = 1;
        for (const Box& b : mu.boxes()) hc *= Rational(k + mu.content(b), mu.hook(b));
        CHECK(Rational(static_cast<long>(reverse_tableaux(mu, k).size())) == hc);
      }
  }
}
