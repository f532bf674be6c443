#include "verify.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/family.hpp"
#include "mgraph/functional.hpp"
#include "mgraph/gauss.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/harmonic.hpp"
#include "mgraph/matrix.hpp"
#include "mgraph/pstar.hpp"
#include "mgraph/special.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph::verify {

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const Row& r) { return !r.pass; }));
}

void Report::add(std::string tag, std::string instance, const Rational& lhs, const Rational& rhs) {
  rows.push_back({std::move(tag), std::move(instance), lhs.str(), rhs.str(), lhs == rhs});
}

void Report::add(std::string tag, std::string instance, std::string lhs, std::string rhs, bool pass) {
  rows.push_back({std::move(tag), std::move(instance), std::move(lhs), std::move(rhs), pass});
}

void Report::append(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

namespace {

std::vector<std::string> default_families() {
  return {
      "young-zz:e=1,t=5/4",       "young-zz:e=3,t=3",          "young-zz:e=3/8,t=1/32",
      "jack:e=1,t=5/4,theta=1/2", "jack:e=3,t=3,theta=1/2",    "jack:e=2,t=5,theta=1/2",
      "jack:e=1,t=5/4,theta=1",   "jack:e=3,t=3,theta=1",      "jack:e=2,t=5,theta=1",
      "jack:e=1,t=5/4,theta=2",   "jack:e=3,t=3,theta=2",      "jack:e=2,t=5,theta=2",
      "kingman:t=1,alpha=1/2",    "kingman:t=2,alpha=0",       "kingman:t=-1/4,alpha=1/2",
      "schur:t=3",                "schur:t=1/2",               "schur:t=7",
  };
}

const std::vector<std::string>& families_or_default(const Options& o) {
  static const std::vector<std::string> defaults = default_families();
  return o.families.empty() ? defaults : o.families;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g_); }
  Rational rational(int num_bound, int den_bound) {
    return Rational(integer(-num_bound, num_bound), integer(1, den_bound));
  }
  Point point(int k) {
    Point x;
    for (int i = 0; i < k; ++i) x.push_back(rational(9, 5));
    return x;
  }

 private:
  std::mt19937_64 g_;
};

std::string point_str(const Point& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + x[i].str();
  return s + ")";
}

Rational young_pizz_closed(const Partition& mu, const Rational& e, const Rational& t) {
  Rational r = 1;
  for (const Box& b : mu.boxes()) {
    const Rational c = mu.content(b);
    r *= (t + c * e + c * c) / Rational(mu.hook(b));
  }
  return mu.size() % 2 ? -r : r;
}

// Closed product for pi_t(P*_mu) on strict mu.
Rational schur_pit_closed(const Partition& mu, const Rational& t) {
  Rational r = 1;
  for (int x : mu.parts()) {
    r /= 2 * factorial(x);
    for (int j = 1; j <= x; ++j) r *= 2 * t + Rational((j - 1) * j);
  }
  for (int i = 1; i <= mu.length(); ++i)
    for (int j = i + 1; j <= mu.length(); ++j) r *= Rational(mu[i] - mu[j], mu[i] + mu[j]);
  return mu.size() % 2 ? -r : r;
}

}  // namespace

Report harmonicity(const Options& o) {
  Report rep{"harmonicity", {}, {}};
  for (const std::string& spec : families_or_default(o)) {
    const HarmonicFamily f = HarmonicFamily::parse(spec);
    int levels = o.levels;
    if (auto cap = f.degree_cap()) levels = std::min(levels, *cap);
    const HarmonicityReport h = check_harmonicity(f, levels, o.workers);
    std::map<Partition, const HarmonicityViolation*> bad;
    for (const auto& v : h.violations) bad[v.mu] = &v;
    for (const Partition& mu : partitions_up_to(levels - 1, f.graph(), f.max_length())) {
      const std::string inst = f.str() + " mu=" + mu.str();
      if (auto it = bad.find(mu); it != bad.end())
        rep.add("harmonicity", inst, it->second->lhs, it->second->rhs);
      else
        rep.add("harmonicity", inst, "ok", "ok", true);
    }
    if (h.negatives.empty()) {
      rep.add("positivity", f.str() + " levels<=" + std::to_string(levels), "min phi >= 0", ">= 0", true);
    } else {
      for (const auto& [mu, v] : h.negatives)
        rep.add("positivity", f.str() + " mu=" + mu.str(), v.str(), ">= 0", false);
    }
    for (int n = 1; n <= levels; ++n)
      rep.add("normalization", f.str() + " n=" + std::to_string(n), level_measure(f, n, o.workers).total(),
              Rational(1));
  }
  return rep;
}

Report normalization(const Options& o) {
  Report rep{"normalization", {}, {}};
  for (const std::string& spec : families_or_default(o)) {
    const HarmonicFamily f = HarmonicFamily::parse(spec);
    int levels = o.levels;
    if (auto cap = f.degree_cap()) levels = std::min(levels, *cap);
    for (int n = 1; n <= levels; ++n)
      rep.add("normalization", f.str() + " n=" + std::to_string(n), level_measure(f, n, o.workers).total(),
              Rational(1));
  }
  return rep;
}

Report dimensions(const Options& o) {
  Report rep{"dimensions", {}, {}};
  const int plain = std::max(o.max_lambda, 9), strict = plain + 3;
  for (const GraphKind& k : {GraphKind::young(), GraphKind::kingman()})
    for (const Partition& lam : partitions_up_to(plain, k))
      rep.add("dimension-" + k.str(), lam.str(), dim(lam, k), dim_closed_form(lam, k));
  for (const Partition& lam : partitions_up_to(strict, GraphKind::schur()))
    rep.add("dimension-schur", lam.str(), dim(lam, GraphKind::schur()), dim_closed_form(lam, GraphKind::schur()));
  // Branching: dim(mu, lambda) = sum over covers nu of mu of kappa(mu, nu) dim(nu, lambda).
  for (const GraphKind& k : {GraphKind::young(), GraphKind::kingman(), GraphKind::schur(), GraphKind::jack(Rational(1, 2))}) {
    const int top = k.tag() == GraphKind::Tag::Jack ? 6 : 8;
    const auto all = partitions_up_to(top, k);
    for (const Partition& mu : all)
      for (const Partition& lam : all) {
        if (lam.size() <= mu.size() || !lam.contains(mu)) continue;
        Rational rhs;
        for (const Partition& nu : covers_up(mu, k))
          if (lam.contains(nu)) rhs += edge_multiplicity(mu, nu, k) * dim(nu, lam, k);
        rep.add("branching-" + k.str(), mu.str() + " -> " + lam.str(), dim(mu, lam, k), rhs);
      }
  }
  return rep;
}

Report interpolation(const Options& o) {
  Report rep{"interpolation", {}, {}};
  const auto all = partitions_up_to(o.max_size, GraphKind::young());
  for (const Partition& mu : all)
    for (const Partition& lam : all) {
      if (lam.size() > mu.size() || lam == mu) continue;
      const std::string inst = "mu=" + mu.str() + " at " + lam.str();
      rep.add("interpolation-s*", inst, shifted_schur_eval(mu, point_of(lam)), Rational());
      rep.add("interpolation-m*", inst, factorial_monomial_eval(mu, point_of(lam)), Rational());
    }
  for (const Partition& mu : all) {
    // Top values do not vanish.
    const Rational s = shifted_schur_eval(mu, point_of(mu)), m = factorial_monomial_eval(mu, point_of(mu));
    rep.add("interpolation-s*-top", mu.str(), s.str(), "!= 0", !s.is_zero());
    rep.add("interpolation-m*-top", mu.str(), m.str(), "!= 0", !m.is_zero());
  }
  const auto strict = partitions_up_to(o.max_size, GraphKind::schur());
  for (const Partition& mu : strict) {
    const StrictPartition smu(mu);
    for (const Partition& lam : strict) {
      if (lam.size() > mu.size()) continue;
      const Rational v = pstar_eval(smu, point_of(lam));
      if (lam == mu)
        rep.add("interpolation-P*-top", mu.str(), v.str(), "!= 0", !v.is_zero());
      else
        rep.add("interpolation-P*", "mu=" + mu.str() + " at " + lam.str(), v, Rational());
    }
  }
  return rep;
}

Report pieri(const Options& o) {
  Report rep{"pieri", {}, {}};
  Rng rng(o.seed);
  const GraphKind Y = GraphKind::young(), K = GraphKind::kingman(), S = GraphKind::schur();
  const auto plain = partitions_up_to(o.max_size, Y);
  const auto strict = partitions_up_to(o.max_size, S);
  for (int p = 0; p < o.points; ++p) {
    const Point x = rng.point(4);
    const std::string at = " at " + point_str(x);
    const TwoRowTable table(pstar_one_row_values(x, 2 * o.max_size + 2));
    Rational p1;
    for (const auto& v : x) p1 += v;
    const Rational ss1 = shifted_schur_eval(Partition{1}, x);
    const Rational ms1 = factorial_monomial_eval(Partition{1}, x);
    const Rational ps1 = pstar_eval(StrictPartition{1}, table);
    for (const Partition& mu : plain) {
      const Rational n = mu.size();
      Rational rs = n * shifted_schur_eval(mu, x), rm = n * factorial_monomial_eval(mu, x), cs, cm;
      for (const Partition& lam : covers_up(mu, Y)) {
        rs += shifted_schur_eval(lam, x);
        cs += schur_eval(lam, x);
      }
      for (const Partition& lam : covers_up(mu, K)) {
        const Rational k = edge_multiplicity(mu, lam, K);
        rm += k * factorial_monomial_eval(lam, x);
        cm += k * monomial_eval(lam, x);
      }
      rep.add("pieri-shifted-schur", mu.str() + at, shifted_schur_eval(mu, x) * ss1, rs);
      rep.add("pieri-factorial-monomial", mu.str() + at, factorial_monomial_eval(mu, x) * ms1, rm);
      rep.add("pieri-schur", mu.str() + at, schur_eval(mu, x) * p1, cs);
      rep.add("pieri-monomial", mu.str() + at, monomial_eval(mu, x) * p1, cm);
    }
    for (const Partition& mu : strict) {
      Rational r = Rational(mu.size()) * pstar_eval(StrictPartition(mu), table);
      for (const Partition& lam : covers_up(mu, S)) r += pstar_eval(StrictPartition(lam), table);
      rep.add("pieri-factorial-schur-p", mu.str() + at, pstar_eval(StrictPartition(mu), table) * ps1, r);
    }
  }
  return rep;
}

Report engine(const Options& o) {
  Report rep{"engine", {}, {}};
  const std::vector<std::pair<Rational, Rational>> young_pairs = {
      {3, 2}, {1, Rational(5, 4)}, {Rational(-3, 2), Rational(7, 5)}, {Rational(1, 3), Rational(-2, 7)},
      {Rational(5, 2), Rational(1, 9)}};
  const int cap = o.max_size;
  auto basis = GeneratorBasis::get(cap);
  for (const auto& [e, t] : young_pairs) {
    const FunctionalSpec spec = FunctionalSpec::young_zz(e, t, cap);
    for (const Partition& mu : partitions_up_to(cap, GraphKind::young()))
      rep.add("engine-young", "e=" + e.str() + ",t=" + t.str() + " mu=" + mu.str(),
              apply_functional(basis->shifted_schur(mu), spec), young_pizz_closed(mu, e, t));
  }
  const int scap = o.max_size + 2;
  for (const Rational& t : {Rational(3), Rational(1, 2), Rational(-7, 3), Rational(2, 5), Rational(5)}) {
    const FunctionalSpec spec = FunctionalSpec::schur_t(t, scap);
    for (const Partition& mu : partitions_up_to(scap, GraphKind::schur()))
      rep.add("engine-schur", "t=" + t.str() + " mu=" + mu.str(), pstar_eval(StrictPartition(mu), spec),
              schur_pit_closed(mu, t));
  }
  return rep;
}

Report staircase(const Options& o) {
  Report rep{"staircase", {}, {}};
  for (int k : o.ks) {
    const Rational t(k * (1 - k), 2);
    const FunctionalSpec spec = FunctionalSpec::schur_t(t, o.max_size + 1);
    Point x;
    for (int i = o.corrected ? k - 1 : k; i >= 1; --i) x.emplace_back(i);
    const TwoRowTable table(pstar_one_row_values(x, o.max_size + 1));
    const std::string tag = o.corrected ? "staircase-corrected" : "staircase";
    for (const Partition& mu : partitions_up_to(o.max_size, GraphKind::schur()))
      rep.add(tag, "k=" + std::to_string(k) + " mu=" + mu.str() + " at " + point_str(x),
              pstar_eval(StrictPartition(mu), spec), pstar_eval(StrictPartition(mu), table));
  }
  return rep;
}

Report pfaffian(const Options& o) {
  Report rep{"pfaffian", {}, {}};
  Rng rng(o.seed);
  for (int n = 2; n <= 10; n += 2)
    for (int rep_i = 0; rep_i < 4; ++rep_i) {
      RationalMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          m(i, j) = rng.rational(9, 4);
          m(j, i) = -m(i, j);
        }
      const std::string inst = "random skew " + std::to_string(n) + "x" + std::to_string(n) + " #" + std::to_string(rep_i);
      const Rational pf = pfaffian_elimination(m);
      rep.add("pfaffian-square", inst, pf * pf, det(m));
      if (n <= 8) rep.add("pfaffian-routes", inst, pfaffian_expansion(m), pf);
    }
  // Pfaffian of two-row values against the one-row definition on short mu.
  const Point x = Rng(o.seed + 1).point(3);
  const TwoRowTable table(pstar_one_row_values(x, 2 * o.max_size + 2));
  for (const Partition& mu : partitions_up_to(o.max_size, GraphKind::schur())) {
    if (mu.length() > 2) continue;
    const StrictPartition s(mu);
    const Rational direct = mu.length() == 0 ? Rational(1) : table(mu[1], mu[2]);
    rep.add("pfaffian-short", mu.str() + " at " + point_str(x), pstar_eval(s, table), direct);
  }
  return rep;
}

Report selberg(const Options& o) {
  Report rep{"selberg", {}, {}};
  auto one = [&](BoundaryKind kind, const Partition& lam, const Partition& mu) {
    const SelbergReport r = selberg_verify(kind, lam, mu, o.workers);
    const std::string tag = "selberg-" + to_string(kind) + (mu.empty() ? "-mass" : "");
    rep.add(tag, "lambda=" + lam.str() + " mu=" + mu.str(), r.lhs, r.rhs);
  };
  if (o.has_instance) {
    one(parse_boundary_kind(o.graph.empty() ? "young" : o.graph), Partition::parse(o.lambda), Partition::parse(o.mu));
    return rep;
  }
  std::vector<BoundaryKind> kinds;
  if (o.graph.empty())
    kinds = {BoundaryKind::Young, BoundaryKind::Kingman, BoundaryKind::Schur, BoundaryKind::Gamma};
  else
    kinds = {parse_boundary_kind(o.graph)};
  const auto plain = partitions_up_to(o.max_size, GraphKind::young());
  const auto strict = partitions_up_to(o.max_size, GraphKind::schur());
  const int L = o.max_length;
  for (BoundaryKind kind : kinds) {
    switch (kind) {
      case BoundaryKind::Young:
      case BoundaryKind::Kingman: {
        const int lo = kind == BoundaryKind::Young ? 2 : 1;
        for (const Partition& lam : plain) {
          if (lam.length() < lo || lam.length() > L) continue;
          for (const Partition& mu : plain)
            if (mu.length() <= lam.length()) one(kind, lam, mu);
        }
        break;
      }
      case BoundaryKind::Schur:
        for (const Partition& lam : strict) {
          if (lam.length() < 2 || lam.length() > L) continue;
          for (const Partition& mu : strict)
            if (mu.empty() || mu.length() == lam.length()) one(kind, lam, mu);
        }
        break;
      case BoundaryKind::Gamma:
        for (const Partition& lam : plain) {
          if (lam.depth() < 1 || lam.depth() > std::min(L, 2)) continue;
          for (const Partition& mu : plain)
            if (mu.empty() || mu.depth() == lam.depth()) one(kind, lam, mu);
        }
        break;
    }
  }
  return rep;
}

Report dim_ratio(const Options& o) {
  Report rep{"dim-ratio", {}, {}};
  const GraphKind Y = GraphKind::young();
  const int mu_max = std::min(o.max_size, 4);
  for (int N = 1; N <= o.max_lambda; ++N)
    for (const Partition& lam : level(N, Y)) {
      const Rational dl = dim(lam, Y);
      for (const Partition& mu : partitions_up_to(std::min(mu_max, N), Y)) {
        const int n = mu.size();
        Rational rhs = shifted_schur_eval(mu, point_of(lam)) / pochhammer(Rational(-N), n);
        if (n % 2) rhs = -rhs;
        const Rational lhs = lam.contains(mu) ? dim(mu, lam, Y) / dl : Rational();
        rep.add("dim-ratio", "mu=" + mu.str() + " lambda=" + lam.str(), lhs, rhs);
      }
    }
  return rep;
}

Report degeneration(const Options& o) {
  Report rep{"degeneration", {}, {}};
  const int jl = std::min(o.levels, 7);
  for (const auto& [e, t] : std::vector<std::pair<Rational, Rational>>{{3, 2}, {1, Rational(5, 4)}, {Rational(3, 8), Rational(1, 32)}}) {
    const HarmonicFamily jack(JackZZ{e, t, 1}), young(YoungZZ{e, t});
    for (const Partition& mu : partitions_up_to(jl, GraphKind::young()))
      rep.add("jack-theta-1", "e=" + e.str() + ",t=" + t.str() + " mu=" + mu.str(), jack.phi(mu), young.phi(mu));
  }
  const GraphKind K = GraphKind::kingman(), J1 = GraphKind::jack(1);
  for (const Partition& mu : partitions_up_to(std::max(o.levels, 8) - 1, GraphKind::young()))
    for (const Partition& lam : covers_up(mu, GraphKind::young())) {
      const std::string inst = mu.str() + " -> " + lam.str();
      rep.add("kappa-theta-0", inst, jack_kappa_function(mu, lam)(Rational()), edge_multiplicity(mu, lam, K));
      rep.add("kappa-theta-1", inst, edge_multiplicity(mu, lam, J1), Rational(1));
    }
  return rep;
}

Report gauss(const Options& o) {
  Report rep{"gauss", {}, {}};
  std::vector<std::array<Rational, 3>> triples = o.triples;
  if (triples.empty())
    triples = {{Rational(1, 2), Rational(1, 3), Rational(6)},
               {Rational(-3), Rational(5, 2), Rational(7)},
               {Rational(2, 3), Rational(-1, 5), Rational(9, 2)},
               {Rational(3, 4), Rational(5, 4), Rational(7)},
               {Rational(1, 7), Rational(2, 7), Rational(5)}};
  const BigFloat tol = BigFloat::parse(o.tolerance);
  for (const auto& [a, b, c] : triples) {
    const GaussReport g = gauss_2f1_report(a, b, c, tol, o.precision);
    rep.add("gauss-2f1",
            "a=" + a.str() + ",b=" + b.str() + ",c=" + c.str() + " terms=" + std::to_string(g.terms) +
                " |diff|=" + g.abs_diff.decimal(6),
            g.partial_sum.decimal(30), g.closed_form.decimal(30), g.pass);
  }
  return rep;
}

Report kernels(const Options& o) {
  Report rep{"kernels", {}, {}};
  Rng rng(o.seed);
  const int levels = std::min(o.levels, 6);
  auto random_block = [&](int count, int& total, std::vector<int>& w) {
    for (int i = 0; i < count; ++i) {
      w.push_back(rng.integer(1, 12));
      total += w.back();
    }
    std::sort(w.rbegin(), w.rend());
  };
  for (int p = 0; p < 5; ++p) {
    std::vector<int> a, b;
    int total = 0;
    random_block(rng.integer(1, 3), total, a);
    random_block(rng.integer(0, 2), total, b);
    const int denom = total + rng.integer(0, 12);
    std::vector<Rational> al, be;
    for (int x : a) al.emplace_back(x, denom);
    for (int x : b) be.emplace_back(x, denom);
    const ThomaPoint w(al, be);
    const auto h = check_harmonicity([&](const Partition& mu) { return young_kernel(mu, w); }, GraphKind::young(),
                                     levels, {}, o.workers);
    rep.add("kernel-young", "omega=" + w.str() + " levels<=" + std::to_string(levels),
            std::to_string(h.violations.size()) + " violations", "0 violations", h.harmonic());
    rep.add("kernel-young-root", "omega=" + w.str(), young_kernel(Partition(), w), Rational(1));
  }
  for (int p = 0; p < 5; ++p) {
    std::vector<int> a;
    int total = 0;
    random_block(rng.integer(1, 4), total, a);
    const int denom = total + rng.integer(0, 12);
    std::vector<Rational> al;
    for (int x : a) al.emplace_back(x, denom);
    const ThomaPoint w(al);
    const auto h = check_harmonicity([&](const Partition& mu) { return kingman_kernel(mu, w); },
                                     GraphKind::kingman(), levels, {}, o.workers);
    rep.add("kernel-kingman", "omega=" + w.str() + " levels<=" + std::to_string(levels),
            std::to_string(h.violations.size()) + " violations", "0 violations", h.harmonic());
    rep.add("kernel-kingman-root", "omega=" + w.str(), kingman_kernel(Partition(), w), Rational(1));
  }
  return rep;
}

Report lattice(const Options& o) {
  Report rep{"lattice", {}, {}};
  std::vector<std::string> specs = o.families;
  if (specs.size() < 2) specs = {"young-zz:e=1,t=5/4", "young-zz:e=3,t=3"};
  const HarmonicFamily phi = HarmonicFamily::parse(specs[0]), psi = HarmonicFamily::parse(specs[1]);
  const int top = o.levels;
  for (const Partition& mu : {Partition(), Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
    const Rational bound = phi.phi(mu) + psi.phi(mu);
    std::optional<Rational> prev_join, prev_meet;
    for (int n = mu.size() + 1; n <= top; ++n) {
      const std::string inst = "mu=" + mu.str() + " n=" + std::to_string(n);
      const Rational j = lattice_bound_approx(phi, psi, mu, n, LatticeMode::Join);
      const Rational m = lattice_bound_approx(phi, psi, mu, n, LatticeMode::Meet);
      rep.add("join-bound", inst, j.str(), "<= " + bound.str(), j <= bound);
      rep.add("meet-bound", inst, m.str(), ">= 0", m.sign() >= 0);
      if (prev_join) rep.add("join-monotone", inst, j.str(), ">= " + prev_join->str(), j >= *prev_join);
      if (prev_meet) rep.add("meet-monotone", inst, m.str(), "<= " + prev_meet->str(), m <= *prev_meet);
      prev_join = j;
      prev_meet = m;
      rep.add("join-self", inst, lattice_bound_approx(phi, phi, mu, n, LatticeMode::Join), phi.phi(mu));
      rep.add("meet-self", inst, lattice_bound_approx(psi, psi, mu, n, LatticeMode::Meet), psi.phi(mu));
    }
  }
  return rep;
}

Report convergence(const Options& o) {
  Report rep{"convergence", {}, {}};
  std::vector<std::string> specs = o.families;
  if (specs.empty()) specs = {"trunc-young:lambda=2+1", "trunc-kingman:lambda=1+1"};
  ConvergenceOptions co = o.convergence;
  co.workers = o.workers;
  for (const std::string& s : specs) {
    const HarmonicFamily f = HarmonicFamily::parse(s);
    const ConvergenceReport c = convergence_experiment(f, o.n_values, co);
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
      const auto& lv = c.levels[i];
      const std::string inst = f.str() + " n=" + std::to_string(lv.n);
      rep.add("convergence-mass", inst, lv.total, Rational(1));
      const bool last = i + 1 == c.levels.size();
      rep.add(last ? "convergence-ratio" : "convergence-ratio-info", inst + " interior=" + std::to_string(lv.interior),
              lv.worst_ratio_error.decimal(8), "<= " + std::to_string(co.ratio_tolerance),
              last ? c.ratio_pass : true);
      if (i > 0)
        rep.add("convergence-distance", inst, lv.binned_distance.decimal(8),
                "< " + c.levels[i - 1].binned_distance.decimal(8),
                lv.binned_distance < c.levels[i - 1].binned_distance);
    }
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"harmonicity", "normalization", "dimensions", "interpolation", "pieri",   "engine",  "staircase", "pfaffian",
          "selberg",     "dim-ratio",     "degeneration", "gauss",       "kernels", "lattice", "convergence"};
}

Report run(const std::string& suite, const Options& opts) {
  static const std::map<std::string, Suite> suites = {
      {"harmonicity", harmonicity}, {"normalization", normalization}, {"dimensions", dimensions},
      {"interpolation", interpolation}, {"pieri", pieri},           {"engine", engine},
      {"staircase", staircase},     {"pfaffian", pfaffian},          {"selberg", selberg},
      {"dim-ratio", dim_ratio},     {"degeneration", degeneration},  {"gauss", gauss},
      {"kernels", kernels},         {"lattice", lattice},            {"convergence", convergence},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + suite + "'");
  return it->second(opts);
}

}  // namespace mgraph::verify
