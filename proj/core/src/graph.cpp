#include "mgraph/graph.hpp"

#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/special.hpp"

namespace mgraph {

namespace {

// Column of the box lambda \ mu, or 0 if lambda does not cover mu.
int added_column(const Partition& mu, const Partition& lambda) {
  if (lambda.size() != mu.size() + 1 || !lambda.contains(mu)) return 0;
  for (int i = 1; i <= lambda.length(); ++i)
    if (lambda[i] != mu[i]) return lambda[i];
  return 0;
}

int checked_column(const Partition& mu, const Partition& lambda, const GraphKind& kind) {
  int j = added_column(mu, lambda);
  if (j == 0 || (kind.strict() && (!mu.is_strict() || !lambda.is_strict())))
    throw std::invalid_argument("not an edge of the " + kind.str() + " graph: " + mu.str() + " -> " +
                                lambda.str());
  return j;
}

}  // namespace

RationalFunction jack_kappa_function(const Partition& mu, const Partition& lambda) {
  const int j = checked_column(mu, lambda, GraphKind::young());
  const Polynomial th = Polynomial::x();
  RationalFunction k(Polynomial(Rational(1)));
  for (int i = 1; mu[i] >= j; ++i) {
    Box b{i, j};
    Rational a = mu.arm(b);
    Rational l = mu.leg(b);
    Polynomial n1 = Polynomial(a) + Polynomial(l + 2) * th;
    Polynomial n2 = Polynomial(a + 1) + Polynomial(l) * th;
    Polynomial d1 = Polynomial(a) + Polynomial(l + 1) * th;
    Polynomial d2 = Polynomial(a + 1) + Polynomial(l + 1) * th;
    k *= RationalFunction(n1 * n2, d1 * d2);
  }
  return k;
}

Rational edge_multiplicity(const Partition& mu, const Partition& lambda, const GraphKind& kind) {
  const int j = checked_column(mu, lambda, kind);
  switch (kind.tag()) {
    case GraphKind::Tag::Young:
    case GraphKind::Tag::Schur:
      return 1;
    case GraphKind::Tag::Kingman:
      return lambda.multiplicity(j);
    case GraphKind::Tag::Jack: {
      const Rational& th = kind.theta();
      Rational k = 1;
      for (int i = 1; mu[i] >= j; ++i) {
        Box b{i, j};
        Rational a = mu.arm(b);
        Rational l = mu.leg(b);
        k *= (a + (l + 2) * th) * (a + 1 + l * th);
        k /= (a + (l + 1) * th) * (a + 1 + (l + 1) * th);
      }
      return k;
    }
  }
  return 0;
}

namespace {

struct DimCache {
  std::shared_mutex mu;
  std::unordered_map<std::string, Rational> table;
};

DimCache& cache() {
  static DimCache c;
  return c;
}

std::string key(const Partition& mu, const Partition& lambda, const GraphKind& kind) {
  return kind.str() + "|" + mu.str() + "|" + lambda.str();
}

}  // namespace

Rational dim(const Partition& mu, const Partition& lambda, const GraphKind& kind) {
  if (mu == lambda) return 1;
  if (lambda.size() <= mu.size() || !lambda.contains(mu)) return 0;
  if (kind.strict() && (!mu.is_strict() || !lambda.is_strict())) return 0;
  const std::string k = key(mu, lambda, kind);
  DimCache& c = cache();
  {
    std::shared_lock lock(c.mu);
    auto it = c.table.find(k);
    if (it != c.table.end()) return it->second;
  }
  Rational total;
  for (const Partition& nu : covers_down(lambda, kind)) {
    Rational d = dim(mu, nu, kind);
    if (!d.is_zero()) total += d * edge_multiplicity(nu, lambda, kind);
  }
  std::unique_lock lock(c.mu);
  c.table.emplace(k, total);
  return total;
}

Rational dim_closed_form(const Partition& lambda, const GraphKind& kind) {
  const int n = lambda.size();
  const int m = lambda.length();
  switch (kind.tag()) {
    case GraphKind::Tag::Young: {
      Rational r = factorial(n);
      for (int i = 1; i <= m; ++i) r /= factorial(lambda[i] + m - i);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) r *= Rational(lambda[i] - i - lambda[j] + j);
      return r;
    }
    case GraphKind::Tag::Kingman: {
      Rational r = factorial(n);
      for (int x : lambda.parts()) r /= factorial(x);
      return r;
    }
    case GraphKind::Tag::Schur: {
      if (!lambda.is_strict()) throw std::invalid_argument("Schur dimension needs a strict partition");
      Rational r = factorial(n);
      for (int x : lambda.parts()) r /= factorial(x);
      for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) r *= Rational(lambda[i] - lambda[j], lambda[i] + lambda[j]);
      return r;
    }
    case GraphKind::Tag::Jack:
      throw UnsupportedError("no closed-form dimension for the Jack graph; use dim()");
  }
  return 0;
}

std::size_t dim_cache_size() {
  std::shared_lock lock(cache().mu);
  return cache().table.size();
}

void clear_dim_cache() {
  std::unique_lock lock(cache().mu);
  cache().table.clear();
}

}  // namespace mgraph
