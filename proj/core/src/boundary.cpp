#include "mgraph/boundary.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/matrix.hpp"
#include "mgraph/parallel.hpp"
#include "mgraph/poly.hpp"
#include "mgraph/special.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph {

namespace {

constexpr int kMaxFaceRank = 5;

void check_block(const std::vector<Rational>& v, const char* name) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].sign() < 0) throw ParameterError(std::string("thoma point: negative ") + name);
    if (i && v[i] > v[i - 1]) throw ParameterError(std::string("thoma point: ") + name + " not nonincreasing");
  }
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s;
}

int perm_sign(const std::vector<int>& p) {
  std::vector<int> q = p;
  int s = 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    while (q[i] != static_cast<int>(i)) {
      std::swap(q[i], q[q[i]]);
      s = -s;
    }
  return s;
}

struct Term {
  int sign;
  std::vector<int> e;
};

// det[a_i^{e_j}] = sum_sigma sgn(sigma) prod_i a_i^{e_sigma(i)}.
std::vector<Term> alternant_terms(const std::vector<int>& e) {
  std::vector<int> s(e.size());
  std::iota(s.begin(), s.end(), 0);
  std::vector<Term> out;
  do {
    Term t{perm_sign(s), std::vector<int>(e.size())};
    for (std::size_t i = 0; i < e.size(); ++i) t.e[i] = e[s[i]];
    out.push_back(std::move(t));
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

std::vector<int> padded(const Partition& p, int l) {
  std::vector<int> v = p.parts();
  v.resize(l, 0);
  return v;
}

std::vector<int> plus_delta(std::vector<int> v) {
  const int l = static_cast<int>(v.size());
  for (int i = 0; i < l; ++i) v[i] += l - 1 - i;
  return v;
}

std::vector<int> add(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// Perfect matchings of idx with the Pfaffian sign.
void matchings(const std::vector<int>& idx, int sign, std::vector<std::pair<int, int>>& cur,
               std::vector<std::pair<int, std::vector<std::pair<int, int>>>>& out) {
  if (idx.empty()) {
    out.emplace_back(sign, cur);
    return;
  }
  for (std::size_t k = 1; k < idx.size(); ++k) {
    std::vector<int> rest;
    for (std::size_t r = 1; r < idx.size(); ++r)
      if (r != k) rest.push_back(idx[r]);
    cur.emplace_back(idx[0], idx[k]);
    matchings(rest, k % 2 ? sign : -sign, cur, out);
    cur.pop_back();
  }
}

// Pf[(a_i - a_j)/(a_i + a_j)] (bordered by 1 for odd l) as a sum of
// polynomial numerators over products 1/(a_i + a_j).
struct PfTerm {
  std::map<std::vector<int>, int> numerator;
  std::vector<std::pair<int, int>> pairs;
};

std::vector<PfTerm> pfaffian_terms(int l) {
  const int n = l + (l % 2);
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> ms;
  std::vector<std::pair<int, int>> cur;
  matchings(idx, 1, cur, ms);
  std::vector<PfTerm> out;
  for (const auto& [sign, m] : ms) {
    PfTerm t;
    t.numerator[std::vector<int>(l, 0)] = sign;
    for (auto [i, j] : m) {
      if (j == l) continue;  // border entry 1
      t.pairs.emplace_back(i, j);
      std::map<std::vector<int>, int> next;
      for (const auto& [e, c] : t.numerator) {
        auto e1 = e, e2 = e;
        ++e1[i];
        ++e2[j];
        next[e1] += c;
        next[e2] -= c;
      }
      t.numerator.clear();
      for (auto& [e, c] : next)
        if (c) t.numerator.emplace(e, c);
    }
    out.push_back(std::move(t));
  }
  return out;
}

void check_rank(int l, const char* what) {
  if (l > kMaxFaceRank)
    throw UnsupportedError(std::string(what) + ": face rank " + std::to_string(l) + " above the cap " +
                           std::to_string(kMaxFaceRank));
}

Rational vandermonde(const std::vector<Rational>& a) {
  Rational v = 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) v *= a[i] - a[j];
  return v;
}

Rational alternant(const std::vector<Rational>& a, const std::vector<int>& e) {
  const std::size_t l = a.size();
  RationalMatrix m(l, l);
  for (std::size_t i = 0; i < l; ++i)
    for (std::size_t j = 0; j < l; ++j) m(i, j) = a[i].pow(e[j]);
  return det(m);
}

Rational schur_pfaffian(const std::vector<Rational>& a) {
  const int l = static_cast<int>(a.size());
  const int n = l + (l % 2);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rational v = j == l ? Rational(1) : (a[i] - a[j]) / (a[i] + a[j]);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return pfaffian(m);
}

// Density without validating the point.
Rational density_value(const DensitySpec& s, const std::vector<Rational>& a) {
  const int l = s.face.l;
  switch (s.kind) {
    case BoundaryKind::Young:
      return s.constant * alternant(a, plus_delta(padded(s.lambda, l))) * vandermonde(a);
    case BoundaryKind::Kingman:
      return s.constant * monomial_eval(s.lambda, a);
    case BoundaryKind::Schur:
      return s.constant * alternant(a, padded(s.lambda, l)) * schur_pfaffian(a);
    case BoundaryKind::Gamma: {
      const FrobeniusCoords fc = FrobeniusCoords::of(s.lambda);
      std::vector<Rational> al(a.begin(), a.begin() + l), be(a.begin() + l, a.end());
      RationalMatrix c(l, l);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) c(i, j) = (al[i] + be[j]).inverse();
      return s.constant * alternant(al, fc.p) * alternant(be, fc.q) * det(c);
    }
  }
  return {};
}

}  // namespace

ThomaPoint::ThomaPoint(std::vector<Rational> a, std::vector<Rational> b) : alpha(std::move(a)), beta(std::move(b)) {
  check_block(alpha, "alpha");
  check_block(beta, "beta");
  if (gamma().sign() < 0) throw ParameterError("thoma point: coordinates sum above 1");
}

Rational ThomaPoint::gamma() const {
  Rational g = 1;
  for (const auto& x : alpha) g -= x;
  for (const auto& x : beta) g -= x;
  return g;
}

std::string ThomaPoint::str() const { return "(" + join(alpha) + ";" + join(beta) + ")"; }

std::string Face::str() const {
  return kind == Kind::Simplex ? "Delta_" + std::to_string(l)
                               : "Delta_" + std::to_string(l) + "," + std::to_string(l);
}

BoundaryKind parse_boundary_kind(std::string_view s) {
  if (s == "young") return BoundaryKind::Young;
  if (s == "kingman") return BoundaryKind::Kingman;
  if (s == "schur") return BoundaryKind::Schur;
  if (s == "gamma" || s == "gamma-shaped") return BoundaryKind::Gamma;
  throw ParseError("unknown boundary graph '" + std::string(s) + "' (young, kingman, schur, gamma)");
}

std::string to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::Young: return "young";
    case BoundaryKind::Kingman: return "kingman";
    case BoundaryKind::Schur: return "schur";
    case BoundaryKind::Gamma: return "gamma";
  }
  return "?";
}

std::vector<Rational> embed_rows(const Partition& nu, int n) {
  if (n < 1 || nu.size() != n) throw ParameterError("embed: need |nu| = n >= 1");
  std::vector<Rational> out;
  for (int x : nu.parts()) out.emplace_back(x, n);
  return out;
}

ThomaPoint embed_frobenius(const Partition& nu, int n) {
  if (n < 1 || nu.size() != n) throw ParameterError("embed: need |nu| = n >= 1");
  const FrobeniusCoords fc = FrobeniusCoords::of(nu);
  ThomaPoint t;
  for (int p : fc.p) t.alpha.emplace_back(2 * p + 1, 2 * n);
  for (int q : fc.q) t.beta.emplace_back(2 * q + 1, 2 * n);
  return t;
}

Rational dirichlet_integral(const std::vector<int>& kappa) {
  if (kappa.empty()) throw ParameterError("dirichlet_integral: no exponents");
  Rational r = 1;
  int s = 0;
  for (int k : kappa) {
    if (k < 1) throw ParameterError("dirichlet_integral: exponents must be positive");
    r *= factorial(k - 1);
    s += k;
  }
  return r / (factorial(s - 1) * factorial(static_cast<int>(kappa.size())));
}

Rational simplex_integral(const std::vector<int>& e, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> used(e.size(), false);
  std::vector<int> blocks;
  Rational inner = 1;
  for (auto [i, j] : pairs) {
    if (used[i] || used[j] || i == j) throw std::invalid_argument("simplex_integral: pairs must be disjoint");
    used[i] = used[j] = true;
    inner *= factorial(e[i]) * factorial(e[j]) / factorial(e[i] + e[j] + 1);
    blocks.push_back(e[i] + e[j]);
  }
  for (std::size_t i = 0; i < e.size(); ++i)
    if (!used[i]) blocks.push_back(e[i]);
  int total = 0;
  for (int k : blocks) {
    inner *= factorial(k);
    total += k;
  }
  return inner / factorial(total + static_cast<int>(blocks.size()) - 1);
}

DensitySpec DensitySpec::make(BoundaryKind kind, const Partition& lambda) {
  DensitySpec s{kind, lambda, {}, 1};
  const int l = lambda.length();
  switch (kind) {
    case BoundaryKind::Young: {
      if (l < 2) throw ParameterError("young density needs l(lambda) >= 2");
      check_rank(l, "young density");
      s.face = {Face::Kind::Simplex, l};
      RationalMatrix g(l, l);
      for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) g(i, j) = factorial(lambda[i + 1] + (l - 1 - i) + (l - 1 - j));
      s.constant = factorial(lambda.size() + l * l - 1) / det(g);
      break;
    }
    case BoundaryKind::Kingman: {
      if (l < 1) throw ParameterError("kingman density needs a nonempty lambda");
      check_rank(l, "kingman density");
      s.face = {Face::Kind::Simplex, l};
      s.constant = factorial(lambda.size() + l - 1);
      for (int k = 1; k <= lambda[1]; ++k) s.constant *= factorial(lambda.multiplicity(k));
      for (int x : lambda.parts()) s.constant /= factorial(x);
      break;
    }
    case BoundaryKind::Schur: {
      if (l < 1 || !lambda.is_strict()) throw ParameterError("schur density needs a nonempty strict lambda");
      check_rank(l, "schur density");
      s.face = {Face::Kind::Simplex, l};
      const int n = l + (l % 2);
      RationalMatrix m(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
          Rational v = j == l ? Rational(1) : Rational(lambda[i + 1] - lambda[j + 1], lambda[i + 1] + lambda[j + 1] + 2);
          m(i, j) = v;
          m(j, i) = -v;
        }
      s.constant = factorial(lambda.size() + l - 1) / pfaffian(m);
      for (int x : lambda.parts()) s.constant /= factorial(x);
      break;
    }
    case BoundaryKind::Gamma: {
      const FrobeniusCoords fc = FrobeniusCoords::of(lambda);
      const int d = fc.depth();
      if (d < 1) throw ParameterError("gamma density needs a nonempty lambda");
      check_rank(d, "gamma density");
      s.face = {Face::Kind::DoubleSimplex, d};
      RationalMatrix c(d, d);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) c(i, j) = Rational(1, fc.p[i] + fc.q[j] + 1);
      s.constant = factorial(lambda.size() - 1) / det(c);
      for (int i = 0; i < d; ++i) s.constant /= factorial(fc.p[i]) * factorial(fc.q[i]);
      break;
    }
  }
  return s;
}

std::string DensitySpec::describe() const {
  std::string body;
  switch (kind) {
    case BoundaryKind::Young: body = "det[a^(lambda+delta)] V(a)"; break;
    case BoundaryKind::Kingman: body = "m_lambda(a)"; break;
    case BoundaryKind::Schur: body = "det[a^lambda] Pf[(a_i-a_j)/(a_i+a_j)]"; break;
    case BoundaryKind::Gamma: body = "det[a^p] det[b^q] det[1/(a_i+b_j)]"; break;
  }
  return constant.str() + " * " + body + " on " + face.str();
}

Rational density(const DensitySpec& spec, const std::vector<Rational>& point) {
  std::vector<Rational> a = point;
  const int k = spec.face.coordinates();
  if (static_cast<int>(a.size()) == k - 1) {
    Rational last = 1;
    for (const auto& x : a) last -= x;
    a.push_back(last);
  }
  if (static_cast<int>(a.size()) != k)
    throw ParameterError("density: expected " + std::to_string(k) + " coordinates on " + spec.face.str());
  Rational sum;
  for (const auto& x : a) {
    if (x.sign() < 0) throw ParameterError("density: negative coordinate");
    sum += x;
  }
  if (sum != 1) throw ParameterError("density: coordinates must sum to 1, got " + sum.str());
  // Points must lie in the ordered face (each block nonincreasing).
  const int l = spec.face.l;
  auto ordered = [](auto first, auto last) { return std::is_sorted(first, last, std::greater<>()); };
  if (spec.kind == BoundaryKind::Gamma) {
    if (!ordered(a.begin(), a.begin() + l) || !ordered(a.begin() + l, a.end()))
      throw ParameterError("density: each block must be nonincreasing");
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if ((a[i] + a[l + j]).is_zero()) throw ParameterError("density: a_i + b_j vanishes");
  } else {
    if (!ordered(a.begin(), a.end())) throw ParameterError("density: coordinates must be nonincreasing");
    if (spec.kind == BoundaryKind::Schur && l >= 2 && a[l - 2].is_zero())
      throw ParameterError("density: a_i + a_j vanishes");
  }
  return density_value(spec, a);
}

namespace {

Rational selberg_lhs(BoundaryKind kind, const Partition& lambda, const Partition& mu) {
  switch (kind) {
    case BoundaryKind::Young: return HarmonicFamily(TruncYoung{lambda}).phi(mu);
    case BoundaryKind::Kingman: return HarmonicFamily(TruncKingman{lambda}).phi(mu);
    case BoundaryKind::Schur: return HarmonicFamily(TruncSchur{StrictPartition(lambda)}).phi(mu);
    case BoundaryKind::Gamma:
      return HarmonicFamily(GammaShaped{FrobeniusCoords::of(lambda), std::max(1, mu.size())}).phi(mu);
  }
  return {};
}

// Sums f(i) for i in [0, n) in parallel; f returns (value, term count).
template <class F>
std::pair<Rational, std::size_t> parallel_sum(std::size_t n, int workers, F&& f) {
  std::vector<Rational> part(n);
  std::vector<std::size_t> cnt(n);
  parallel_for(n, workers, [&](std::size_t i) { std::tie(part[i], cnt[i]) = f(i); });
  Rational s;
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    s += part[i];
    c += cnt[i];
  }
  return {s, c};
}

}  // namespace

SelbergReport selberg_verify(BoundaryKind kind, const Partition& lambda, const Partition& mu, int workers) {
  SelbergReport rep{kind, lambda, mu, {}, {}, 0, false};
  const DensitySpec spec = DensitySpec::make(kind, lambda);
  const int l = spec.face.l;
  std::pair<Rational, std::size_t> integral;

  switch (kind) {
    case BoundaryKind::Young: {
      if (mu.length() > l) break;  // s_mu vanishes in l variables
      const auto outer = alternant_terms(plus_delta(padded(mu, l)));
      const auto inner = alternant_terms(plus_delta(padded(lambda, l)));
      integral = parallel_sum(outer.size(), workers, [&](std::size_t i) {
        Rational s;
        for (const Term& t : inner) s += Rational(outer[i].sign * t.sign) * simplex_integral(add(outer[i].e, t.e));
        return std::pair{s, inner.size()};
      });
      integral.first /= factorial(l);
      break;
    }
    case BoundaryKind::Kingman: {
      if (mu.length() > l) break;
      const auto outer = distinct_exponent_vectors(mu, l);
      const auto inner = distinct_exponent_vectors(lambda, l);
      integral = parallel_sum(outer.size(), workers, [&](std::size_t i) {
        Rational s;
        for (const auto& e : inner) s += simplex_integral(add(outer[i], e));
        return std::pair{s, inner.size()};
      });
      integral.first /= factorial(l);
      break;
    }
    case BoundaryKind::Schur: {
      if (!mu.is_strict()) throw ParameterError("schur identity: mu must be strict");
      const auto lam_terms = alternant_terms(padded(lambda, l));
      if (mu.length() == l) {
        const auto outer = alternant_terms(padded(mu, l));
        integral = parallel_sum(outer.size(), workers, [&](std::size_t i) {
          Rational s;
          for (const Term& t : lam_terms)
            s += Rational(outer[i].sign * t.sign) * simplex_integral(add(outer[i].e, t.e));
          return std::pair{s, lam_terms.size()};
        });
      } else if (mu.empty()) {
        const auto pf = pfaffian_terms(l);
        integral = parallel_sum(lam_terms.size(), workers, [&](std::size_t i) {
          Rational s;
          std::size_t c = 0;
          for (const PfTerm& t : pf)
            for (const auto& [e, coef] : t.numerator) {
              s += Rational(lam_terms[i].sign * coef) * simplex_integral(add(e, lam_terms[i].e), t.pairs);
              ++c;
            }
          return std::pair{s, c};
        });
      } else {
        throw UnsupportedError("schur identity: the exact route needs l(mu) = l(lambda) = " + std::to_string(l) +
                               " or mu empty; P_mu times the Pfaffian is an alternant only at full length");
      }
      integral.first /= factorial(l);
      break;
    }
    case BoundaryKind::Gamma: {
      const FrobeniusCoords fc = FrobeniusCoords::of(lambda);
      const auto tp = alternant_terms(fc.p), tq = alternant_terms(fc.q);
      if (mu.depth() == l) {
        const FrobeniusCoords fm = FrobeniusCoords::of(mu);
        const auto tP = alternant_terms(fm.p), tQ = alternant_terms(fm.q);
        integral = parallel_sum(tp.size(), workers, [&](std::size_t i) {
          Rational s;
          std::size_t c = 0;
          for (const Term& b : tq)
            for (const Term& P : tP)
              for (const Term& Q : tQ) {
                s += Rational(tp[i].sign * b.sign * P.sign * Q.sign) *
                     simplex_integral(concat(add(tp[i].e, P.e), add(b.e, Q.e)));
                ++c;
              }
          return std::pair{s, c};
        });
      } else if (mu.empty()) {
        std::vector<int> ids(l);
        std::iota(ids.begin(), ids.end(), 0);
        const auto sigmas = alternant_terms(ids);
        integral = parallel_sum(tp.size(), workers, [&](std::size_t i) {
          Rational s;
          std::size_t c = 0;
          for (const Term& b : tq)
            for (const Term& sg : sigmas) {
              std::vector<std::pair<int, int>> pairs;
              for (int k = 0; k < l; ++k) pairs.emplace_back(k, l + sg.e[k]);
              s += Rational(tp[i].sign * b.sign * sg.sign) * simplex_integral(concat(tp[i].e, b.e), pairs);
              ++c;
            }
          return std::pair{s, c};
        });
      } else {
        throw UnsupportedError("gamma identity: the exact route needs depth(mu) = depth(lambda) = " +
                               std::to_string(l) + " or mu empty");
      }
      integral.first /= factorial(l) * factorial(l);
      break;
    }
  }

  rep.rhs = spec.constant * integral.first;
  rep.terms = integral.second;
  rep.lhs = selberg_lhs(kind, lambda, mu);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

Rational young_kernel(const Partition& mu, const ThomaPoint& omega) {
  if (mu.empty()) return 1;
  const int l = mu.length();
  const int top = mu[1] + l - 1;
  // h_0..h_top of prod(1 + b u) / prod(1 - a u) * exp(g u).
  std::vector<Rational> h(top + 1);
  h[0] = 1;
  for (const auto& b : omega.beta)
    for (int k = top; k >= 1; --k) h[k] += b * h[k - 1];
  for (const auto& a : omega.alpha)
    for (int k = 1; k <= top; ++k) h[k] += a * h[k - 1];
  const Rational g = omega.gamma();
  std::vector<Rational> ex(top + 1);
  ex[0] = 1;
  for (int k = 1; k <= top; ++k) ex[k] = ex[k - 1] * g / Rational(k);
  std::vector<Rational> hh(top + 1);
  for (int i = 0; i <= top; ++i)
    for (int j = 0; i + j <= top; ++j) hh[i + j] += h[i] * ex[j];
  RationalMatrix m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      const int k = mu[i + 1] - (i + 1) + (j + 1);
      m(i, j) = k < 0 ? Rational() : hh[k];
    }
  return det(m);
}

Rational kingman_kernel(const Partition& mu, const ThomaPoint& omega) {
  if (!omega.beta.empty()) throw ParameterError("kingman kernel: the Kingman boundary has no beta coordinates");
  const int r1 = mu.multiplicity(1);
  const Rational g = omega.gamma();
  std::vector<int> rest;
  for (int x : mu.parts())
    if (x > 1) rest.push_back(x);
  Rational total, gk = 1;
  for (int k = 0; k <= r1; ++k) {
    std::vector<int> parts = rest;
    parts.insert(parts.end(), r1 - k, 1);
    total += gk / factorial(k) * monomial_eval(Partition(parts), omega.alpha);
    gk *= g;
  }
  return total;
}

namespace {

// Factorials 0..n as exact integers.
class FactorialTable {
 public:
  explicit FactorialTable(int n) : f_(n + 1) {
    f_[0] = 1;
    for (int i = 1; i <= n; ++i) f_[i] = f_[i - 1] * i;
  }
  const mpz_class& operator()(int i) const { return f_.at(i); }

 private:
  std::vector<mpz_class> f_;
};

mpz_class det_int(std::vector<std::vector<mpz_class>> m) {
  // Bareiss elimination.
  const std::size_t n = m.size();
  mpz_class sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

struct FastMass {
  virtual ~FastMass() = default;
  virtual Rational operator()(const Partition& nu) const = 0;
};

// Truncated Young: dim(nu) det[(lam_i+d_i+nu_j+d_j)!] / det[(lam_i+d_i+d_j)!] / (|lam|+l^2)_n.
struct YoungMass : FastMass {
  YoungMass(const Partition& lam, int n) : lam(lam), l(lam.length()), n(n), f(n + lam.size() + 2 * l * l) {
    std::vector<std::vector<mpz_class>> g(l, std::vector<mpz_class>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) g[i][j] = f(lam[i + 1] + (l - 1 - i) + (l - 1 - j));
    const int c = lam.size() + l * l;
    den = Rational(mpq_class(det_int(g) * f(c + n - 1), f(c - 1)));
  }
  Rational operator()(const Partition& nu) const override {
    if (nu.length() > l) return {};
    std::vector<std::vector<mpz_class>> g(l, std::vector<mpz_class>(l));
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) g[i][j] = f(lam[i + 1] + (l - 1 - i) + nu[j + 1] + (l - 1 - j));
    mpz_class dimnum = f(n), dimden = 1;
    for (int i = 1; i <= l; ++i) {
      dimden *= f(nu[i] + l - i);
      for (int j = i + 1; j <= l; ++j) dimnum *= nu[i] - i - nu[j] + j;
    }
    return Rational(mpq_class(dimnum * det_int(g), dimden)) / den;
  }
  Partition lam;
  int l, n;
  FactorialTable f;
  Rational den;
};

// Truncated Kingman: n!/prod nu_i! sum_e prod (lam_i+1)_{e_i} / (|lam|+l)_n.
struct KingmanMass : FastMass {
  KingmanMass(const Partition& lam, int n) : lam(lam), l(lam.length()), n(n), f(n + lam.size() + l + 1) {
    const int c = lam.size() + l;
    den = Rational(mpq_class(f(c + n - 1), f(c - 1)));
  }
  Rational operator()(const Partition& nu) const override {
    if (nu.length() > l) return {};
    mpz_class s = 0;
    for (const auto& e : distinct_exponent_vectors(nu, l)) {
      mpz_class p = 1;
      for (int i = 0; i < l; ++i) p *= f(lam[i + 1] + e[i]);
      s += p;
    }
    mpz_class dd = 1;
    for (int x : lam.parts()) dd *= f(x);
    for (int x : nu.parts()) dd *= f(x);
    return Rational(mpq_class(f(n) * s, dd)) / den;
  }
  Partition lam;
  int l, n;
  FactorialTable f;
  Rational den;
};

struct GenericMass : FastMass {
  explicit GenericMass(const HarmonicFamily& fam) : fam(fam) {}
  Rational operator()(const Partition& nu) const override {
    Rational p = fam.phi(nu);
    return p.is_zero() ? p : dim_closed_form(nu, fam.graph()) * p;
  }
  const HarmonicFamily& fam;
};

// Exact integral of a polynomial over [lo, hi].
Rational integrate(const Polynomial& p, const Rational& lo, const Rational& hi) {
  Rational s;
  const auto& c = p.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Rational kk(static_cast<long>(k + 1), 1L);
    s += c[k] * (hi.pow(static_cast<long>(k + 1)) - lo.pow(static_cast<long>(k + 1))) / kk;
  }
  return s;
}

// Bin integrals of the density over the ordered face, keyed by bin index.
std::map<std::vector<int>, Rational> binned_density(const DensitySpec& spec, int R) {
  const int l = spec.face.l;
  std::map<std::vector<int>, Rational> out;
  if (l == 2) {
    // On the face a_2 = 1 - a_1 and the density is a polynomial in a_1.
    const int deg = spec.lambda.size() + 2 * l * l + 2;
    std::vector<Rational> xs, ys;
    for (int k = 0; k <= deg; ++k) {
      xs.push_back(Rational(1, 2) + Rational(k + 1, 2 * (deg + 2)));
      ys.push_back(density_value(spec, {xs.back(), 1 - xs.back()}));
    }
    Polynomial p;
    for (int k = 0; k <= deg; ++k) {
      Polynomial term(ys[k]);
      for (int j = 0; j <= deg; ++j)
        if (j != k) term *= Polynomial::linear_root(xs[j]) * Polynomial((xs[k] - xs[j]).inverse());
      p += term;
    }
    for (int b = 0; b < R; ++b) {
      Rational lo(b, R), hi(b + 1, R);
      if (hi <= Rational(1, 2)) continue;
      if (lo < Rational(1, 2)) lo = Rational(1, 2);
      out[{b}] = integrate(p, lo, hi);
    }
    return out;
  }
  // Midpoint rule on an S-fold refinement of each bin.
  const int S = 6;
  const int M = R * S;
  const Rational h(1, M);
  Rational cell = 1;
  for (int i = 0; i < l - 1; ++i) cell *= h;
  std::vector<int> idx(l - 1, 0);
  while (true) {
    std::vector<Rational> a(l);
    Rational last = 1;
    bool inside = true;
    for (int i = 0; i < l - 1; ++i) {
      a[i] = Rational(2 * idx[i] + 1, 2 * M);
      last -= a[i];
      if (i && a[i] > a[i - 1]) inside = false;
    }
    a[l - 1] = last;
    if (inside && last.sign() >= 0 && last <= a[l - 2]) {
      std::vector<int> bin(l - 1);
      for (int i = 0; i < l - 1; ++i) bin[i] = idx[i] / S;
      out[bin] += density_value(spec, a) * cell;
    }
    int k = 0;
    while (k < l - 1 && ++idx[k] == M) idx[k++] = 0;
    if (k == l - 1) break;
  }
  return out;
}

std::vector<int> bin_of(const std::vector<Rational>& a, int R) {
  std::vector<int> b(a.size() - 1);
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    mpz_class f = (a[i] * R).floor();
    b[i] = std::min<int>(static_cast<int>(f.get_si()), R - 1);
  }
  return b;
}

}  // namespace

ConvergenceReport convergence_experiment(const HarmonicFamily& family, const std::vector<int>& n_values,
                                         const ConvergenceOptions& opts) {
  const auto& params = family.params();
  BoundaryKind kind;
  Partition lam;
  if (auto* f = std::get_if<TruncYoung>(&params)) {
    kind = BoundaryKind::Young;
    lam = f->lambda;
  } else if (auto* f = std::get_if<TruncKingman>(&params)) {
    kind = BoundaryKind::Kingman;
    lam = f->lambda;
  } else if (auto* f = std::get_if<TruncSchur>(&params)) {
    kind = BoundaryKind::Schur;
    lam = f->lambda.partition();
  } else if (std::holds_alternative<GammaShaped>(params)) {
    throw UnsupportedError("convergence: gamma-shaped families are not supported (signed limit on Delta_{d,d})");
  } else {
    throw ParameterError("convergence: needs a truncated family, got " + family.str());
  }
  if (opts.resolution < 1) throw ParameterError("convergence: resolution must be positive");
  const DensitySpec spec = DensitySpec::make(kind, lam);
  const int l = spec.face.l;
  const auto bins = binned_density(spec, opts.resolution);
  const mpfr_prec_t prec = opts.precision;

  ConvergenceReport rep;
  rep.family = family.str();
  std::vector<int> ns = n_values;
  std::sort(ns.begin(), ns.end());
  for (int n : ns) {
    if (n < 1) throw ParameterError("convergence: n must be positive");
    std::unique_ptr<FastMass> mass;
    if (kind == BoundaryKind::Young)
      mass = std::make_unique<YoungMass>(lam, n);
    else if (kind == BoundaryKind::Kingman)
      mass = std::make_unique<KingmanMass>(lam, n);
    else
      mass = std::make_unique<GenericMass>(family);

    const std::vector<Partition> lev = level(n, family.graph(), l);
    std::vector<ConvergencePoint> pts(lev.size());
    const Rational eps_n = opts.epsilon * n;
    parallel_for(lev.size(), opts.workers, [&](std::size_t i) {
      ConvergencePoint& p = pts[i];
      p.nu = lev[i];
      p.mass = (*mass)(p.nu);
      p.point = embed_rows(p.nu, n);
      p.point.resize(l);
      p.interior = Rational(p.nu[l]) >= eps_n;
      for (int k = 1; k < l && p.interior; ++k) p.interior = Rational(p.nu[k] - p.nu[k + 1]) >= eps_n;
      if (p.interior) {
        Rational scaled = p.mass;
        for (int k = 1; k < l; ++k) scaled *= n;
        p.ratio = BigFloat(scaled, prec) / BigFloat(density_value(spec, p.point), prec);
      }
    });

    ConvergenceLevel lv;
    lv.n = n;
    lv.worst_ratio_error = BigFloat(prec);
    std::map<std::vector<int>, Rational> disc;
    const BigFloat one(1L, prec);
    for (const auto& p : pts) {
      lv.total += p.mass;
      disc[bin_of(p.point, opts.resolution)] += p.mass;
      if (p.interior) {
        ++lv.interior;
        BigFloat err = (*p.ratio - one).abs();
        if (err > lv.worst_ratio_error) lv.worst_ratio_error = err;
      }
    }
    Rational dist;
    std::set<std::vector<int>> keys;
    for (const auto& [k, v] : disc) keys.insert(k);
    for (const auto& [k, v] : bins) keys.insert(k);
    for (const auto& k : keys) {
      auto a = disc.find(k);
      auto b = bins.find(k);
      dist += ((a == disc.end() ? Rational() : a->second) - (b == bins.end() ? Rational() : b->second)).abs();
    }
    lv.binned_distance = BigFloat(dist, prec);
    if (opts.keep_points) lv.points = std::move(pts);
    rep.levels.push_back(std::move(lv));
  }
  if (!rep.levels.empty()) {
    const auto& last = rep.levels.back();
    rep.ratio_pass = last.interior > 0 && last.worst_ratio_error.to_double() <= opts.ratio_tolerance;
    rep.distance_pass = true;
    for (std::size_t i = 1; i < rep.levels.size(); ++i)
      if (!(rep.levels[i].binned_distance < rep.levels[i - 1].binned_distance)) rep.distance_pass = false;
  }
  return rep;
}

}  // namespace mgraph
