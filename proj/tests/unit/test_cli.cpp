#include <doctest.h>

#include "mgraph/errors.hpp"
#include "verify.hpp"

using namespace mgraph;

TEST_SUITE("cli") {
  TEST_CASE("report bookkeeping") {
    verify::Report r{"x", {}, {}};
    CHECK_FALSE(r.pass());  // nothing checked is not a pass
    r.add("a", "i", Rational(1, 2), Rational(2, 4));
    CHECK(r.pass());
    CHECK(r.rows[0].lhs == "1/2");
    r.add("b", "j", "1", "2", false);
    CHECK(r.failures() == 1);
    CHECK_FALSE(r.pass());
  }

  TEST_CASE("suite registry") {
    const auto names = verify::suite_names();
    CHECK(names.size() == 15);
    CHECK_THROWS_AS(verify::run("nosuch", {}), std::invalid_argument);
  }

  TEST_CASE("suites on small inputs") {
    verify::Options o;
    o.levels = 5;
    o.max_size = 4;
    o.max_lambda = 5;
    o.points = 3;
    for (const char* s : {"harmonicity", "normalization", "interpolation", "pieri", "engine", "pfaffian", "dim-ratio",
                          "degeneration", "kernels", "lattice"})
      CHECK_MESSAGE(verify::run(s, o).pass(), s);
    o.families = {"schur:t=-1"};
    CHECK_FALSE(verify::run("harmonicity", o).pass());
  }

  TEST_CASE("single integral instance") {
    verify::Options o;
    o.graph = "kingman";
    o.lambda = "1+1";
    o.mu = "2";
    o.has_instance = true;
    const verify::Report r = verify::run("selberg", o);
    REQUIRE(r.rows.size() == 1);
    CHECK(r.rows[0].lhs == "3/5");
    CHECK(r.rows[0].rhs == "3/5");
  }

  TEST_CASE("staircase variants") {
    verify::Options o;
    o.max_size = 4;
    o.corrected = true;
    CHECK(verify::run("staircase", o).pass());
    o.corrected = false;
    CHECK_FALSE(verify::run("staircase", o).pass());
  }

  TEST_CASE("seeded suites are reproducible") {
    verify::Options o;
    o.points = 2;
    o.max_size = 3;
    const auto a = verify::run("pieri", o), b = verify::run("pieri", o);
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t i = 0; i < a.rows.size(); ++i) CHECK(a.rows[i].instance == b.rows[i].instance);
    o.seed = 7;
    CHECK(verify::run("pieri", o).rows[0].instance != a.rows[0].instance);
  }
}
