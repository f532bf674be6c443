#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mgraph/bigfloat.hpp"
#include "mgraph/boundary.hpp"
#include "mgraph/rational.hpp"

namespace mgraph::verify {

// One identity instance: both sides as exact strings (or decimals for
// toleranced checks).
struct Row {
  std::string tag;
  std::string instance;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Row> rows;
  std::vector<std::string> notes;

  std::size_t failures() const;
  bool pass() const { return !rows.empty() && failures() == 0; }
  void add(std::string tag, std::string instance, const Rational& lhs, const Rational& rhs);
  void add(std::string tag, std::string instance, std::string lhs, std::string rhs, bool pass);
  void append(const Report& other);
};

struct Options {
  std::vector<std::string> families;
  int levels = 8;
  std::string graph;
  std::string lambda;
  std::string mu;
  bool has_instance = false;  // lambda/mu given explicitly
  int max_size = 6;
  int max_lambda = 8;
  int max_length = 3;
  int points = 20;
  std::vector<int> ks = {2, 3};
  bool corrected = false;
  std::uint64_t seed = 2026;
  int workers = 1;
  std::vector<int> n_values = {500, 1000, 2000};
  ConvergenceOptions convergence;
  std::string tolerance = "1e-20";
  mpfr_prec_t precision = 128;
  std::vector<std::array<Rational, 3>> triples;
};

using Suite = std::function<Report(const Options&)>;

// Known suite names in a fixed order.
std::vector<std::string> suite_names();
// Throws std::invalid_argument for an unknown name.
Report run(const std::string& suite, const Options& opts);

// Individual suites.
Report harmonicity(const Options& o);    // harmonicity + positivity + normalization per family
Report normalization(const Options& o);  // level sums only
Report dimensions(const Options& o);     // recursion vs closed forms, branching
Report interpolation(const Options& o);  // vanishing of s*, m*, P*
Report pieri(const Options& o);          // shifted and classical Pieri under evaluation
Report engine(const Options& o);         // functional engine vs closed products
Report staircase(const Options& o);      // pi at t = k(1-k)/2 vs staircase evaluation
Report pfaffian(const Options& o);       // Pf^2 = det, expansion = elimination, P* Pfaffian
Report selberg(const Options& o);        // exact integral identities
Report dim_ratio(const Options& o);      // dim(mu,lambda)/dim(lambda) vs s*_mu(lambda)
Report degeneration(const Options& o);   // Jack(1) = Young, kappa at theta = 0 = Kingman
Report gauss(const Options& o);          // 2F1 at 1
Report kernels(const Options& o);        // boundary kernel harmonicity
Report lattice(const Options& o);        // join / meet approximations
Report convergence(const Options& o);    // asymptotic experiments

}  // namespace mgraph::verify
