#include "mgraph/harmonic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/parallel.hpp"
#include "mgraph/pstar.hpp"
#include "mgraph/special.hpp"

namespace mgraph {

HarmonicityReport check_harmonicity(const PhiFunction& phi, const GraphKind& kind, int max_level,
                                    std::optional<int> max_length, int workers) {
  if (max_level < 1) throw ParameterError("check_harmonicity: max_level must be >= 1");
  HarmonicityReport rep;
  rep.max_level = max_level;
  const std::vector<Partition> verts = partitions_up_to(max_level, kind, max_length);

  std::vector<Rational> value(verts.size());
  parallel_for(verts.size(), workers, [&](std::size_t i) { value[i] = phi(verts[i]); });
  std::map<Partition, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index.emplace(verts[i], i);

  std::vector<std::optional<HarmonicityViolation>> bad(verts.size());
  parallel_for(verts.size(), workers, [&](std::size_t i) {
    const Partition& mu = verts[i];
    if (mu.size() >= max_level) return;
    Rational rhs;
    for (const Partition& lam : covers_up(mu, kind)) {
      auto it = index.find(lam);
      if (it == index.end()) continue;  // outside the truncation
      rhs += edge_multiplicity(mu, lam, kind) * value[it->second];
    }
    if (rhs != value[i]) bad[i] = HarmonicityViolation{mu, value[i], rhs};
  });

  for (std::size_t i = 0; i < verts.size(); ++i) {
    if (verts[i].size() < max_level) ++rep.vertices_checked;
    if (bad[i]) rep.violations.push_back(*bad[i]);
    if (value[i].sign() < 0) rep.negatives.emplace_back(verts[i], value[i]);
  }
  return rep;
}

HarmonicityReport check_harmonicity(const HarmonicFamily& family, int max_level, int workers) {
  if (auto cap = family.degree_cap(); cap && max_level > *cap)
    throw ParameterError("check_harmonicity: level " + std::to_string(max_level) + " exceeds the degree cap " +
                         std::to_string(*cap) + " of " + family.str());
  return check_harmonicity([&](const Partition& mu) { return family.phi(mu); }, family.graph(), max_level,
                           family.max_length(), workers);
}

Rational LevelMeasure::total() const {
  Rational s;
  for (const auto& [lam, m] : mass) s += m;
  return s;
}

LevelMeasure level_measure(const HarmonicFamily& family, int n, int workers) {
  const GraphKind kind = family.graph();
  LevelMeasure lm;
  lm.n = n;
  const std::vector<Partition> lev = level(n, kind, family.max_length());
  std::vector<Rational> m(lev.size());
  parallel_for(lev.size(), workers, [&](std::size_t i) {
    Rational p = family.phi(lev[i]);
    m[i] = p.is_zero() ? p : dim(lev[i], kind) * p;
  });
  lm.mass.reserve(lev.size());
  for (std::size_t i = 0; i < lev.size(); ++i) lm.mass.emplace_back(lev[i], std::move(m[i]));
  return lm;
}

namespace {

Admissibility scan_nonnegative(const HarmonicFamily& family, int level_bound) {
  int L = level_bound;
  if (auto cap = family.degree_cap()) L = std::min(L, *cap);
  const GraphKind kind = family.graph();
  for (const Partition& mu : partitions_up_to(L, kind, family.max_length())) {
    if (family.phi(mu).sign() < 0)
      return {false, true, "surrogate: phi(" + mu.str() + ") < 0"};
  }
  return {true, true, "surrogate: phi >= 0 through level " + std::to_string(L)};
}

// z, z' with z + z' = e and zz' = t: either a nonreal conjugate pair, or
// both real inside one open interval (m, m+1).
Admissibility young_region(const Rational& e, const Rational& t) {
  const Rational disc = e * e - 4 * t;
  if (disc.sign() < 0) return {true, false, "z, z' nonreal conjugates"};
  const Rational half = e / 2;
  if (half.is_integer()) return {false, false, "real z, z' straddle or hit an integer"};
  const Rational m(half.floor());
  auto f = [&](const Rational& x) { return x * x - e * x + t; };
  if (f(m).sign() > 0 && f(m + 1).sign() > 0)
    return {true, false, "real z, z' inside (" + m.str() + ", " + (m + 1).str() + ")"};
  return {false, false, "real z, z' not inside a common open unit interval"};
}

}  // namespace

Admissibility admissible(const HarmonicFamily& family, int surrogate_level) {
  const auto& p = family.params();
  if (auto* f = std::get_if<YoungZZ>(&p)) return young_region(f->e, f->t);
  if (auto* f = std::get_if<KingmanTA>(&p)) {
    const bool ok = f->alpha.sign() >= 0 && f->alpha < 1 && f->t > -f->alpha;
    return {ok, false, ok ? "0 <= alpha < 1, t > -alpha" : "outside 0 <= alpha < 1, t > -alpha"};
  }
  if (auto* f = std::get_if<SchurT>(&p)) {
    const bool ok = f->t.sign() > 0;
    return {ok, false, ok ? "t > 0" : "t <= 0"};
  }
  return scan_nonnegative(family, surrogate_level);
}

Rational lattice_bound_approx(const HarmonicFamily& phi, const HarmonicFamily& psi, const Partition& mu, int n,
                              LatticeMode mode) {
  const GraphKind kind = phi.graph();
  if (!(psi.graph() == kind)) throw std::invalid_argument("lattice bound: families live on different graphs");
  if (mu.size() >= n) throw ParameterError("lattice bound: need |mu| < n");
  std::optional<int> len;
  if (phi.max_length() && psi.max_length()) len = std::max(*phi.max_length(), *psi.max_length());
  Rational total;
  for (const Partition& lam : level(n, kind, len)) {
    if (!lam.contains(mu)) continue;
    const Rational a = phi.phi(lam), b = psi.phi(lam);
    const Rational& v = mode == LatticeMode::Join ? std::max(a, b) : std::min(a, b);
    if (!v.is_zero()) total += dim(mu, lam, kind) * v;
  }
  return total;
}

Rational extrapolated_phi(const FunctionalSpec& spec, const Partition& mu) {
  const int n = mu.size();
  Rational v;
  if (spec.family() == GeneratorFamily::HStar) {
    v = apply_functional(GeneratorBasis::get(spec.degree_cap())->shifted_schur(mu), spec);
  } else {
    v = pstar_eval(StrictPartition(mu), spec);
  }
  if (n % 2) v = -v;
  return v / pochhammer(spec.t(), n);
}

}  // namespace mgraph
