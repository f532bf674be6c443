#include "mgraph/series.hpp"

#include <stdexcept>

#include "mgraph/special.hpp"

namespace mgraph {

std::vector<Rational> laurent_at_infinity(const RationalFunction& f, int n) {
  const Polynomial& num = f.num();
  const Polynomial& den = f.den();
  std::vector<Rational> c(n + 1);
  if (num.is_zero()) return c;
  const int dn = num.degree(), dd = den.degree();
  if (dn > dd) throw std::invalid_argument("laurent_at_infinity: function has a pole at infinity");
  // f(1/w) = w^(dd-dn) * rev(num)(w) / rev(den)(w), rev(den)(0) != 0.
  const int shift = dd - dn;
  std::vector<Rational> rn(dn + 1), rd(dd + 1);
  for (int k = 0; k <= dn; ++k) rn[k] = num.coeff(dn - k);
  for (int k = 0; k <= dd; ++k) rd[k] = den.coeff(dd - k);
  const Rational inv = rd[0].inverse();
  std::vector<Rational> q(std::max(0, n - shift + 1));
  for (int k = 0; k < static_cast<int>(q.size()); ++k) {
    Rational s = k <= dn ? rn[k] : Rational();
    for (int j = 1; j <= std::min(k, dd); ++j) s -= rd[j] * q[k - j];
    q[k] = s * inv;
  }
  for (int k = shift; k <= n; ++k) c[k] = q[k - shift];
  return c;
}

std::vector<Rational> laurent_of_product(const std::vector<std::pair<Rational, Rational>>& factors, int n) {
  std::vector<Rational> c(n + 1);
  c[0] = 1;
  std::vector<Rational> f(n + 1), next(n + 1);
  for (const auto& [a, b] : factors) {
    // (1 + a w)/(1 + b w) = 1 + sum_{j>=1} ((-b)^j + a (-b)^(j-1)) w^j
    Rational prev = 1;
    f[0] = 1;
    for (int j = 1; j <= n; ++j) {
      Rational cur = prev * -b;
      f[j] = cur + a * prev;
      prev = std::move(cur);
    }
    for (int k = 0; k <= n; ++k) {
      Rational s;
      for (int i = 0; i <= k; ++i)
        if (!c[i].is_zero() && !f[k - i].is_zero()) s += c[i] * f[k - i];
      next[k] = std::move(s);
    }
    std::swap(c, next);
  }
  return c;
}

std::vector<Rational> falling_basis_coeffs(const std::vector<Rational>& c, int n) {
  if (static_cast<int>(c.size()) < n + 1) throw std::invalid_argument("falling_basis_coeffs: too few coefficients");
  if (c[0] != 1) throw std::invalid_argument("series must have constant term 1, got " + c[0].str());
  const auto s = stirling2_table(n);
  std::vector<Rational> g(n + 1);
  for (int k = 1; k <= n; ++k) {
    Rational v = c[k];
    for (int m = 1; m < k; ++m)
      if (!g[m].is_zero()) v -= s[k - 1][m - 1] * g[m];
    g[k] = std::move(v);
  }
  g.erase(g.begin());
  return g;
}

std::vector<Rational> extract_series_coeffs(const RationalFunction& f, int n) {
  return falling_basis_coeffs(laurent_at_infinity(f, n), n);
}

RationalFunction h_star_series(const Point& x) {
  Polynomial num(Rational(1)), den(Rational(1));
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational s = static_cast<long>(i + 1);
    num *= Polynomial::linear_root(-s);
    den *= Polynomial::linear_root(-(s - x[i]));
  }
  return RationalFunction(num, den);
}

RationalFunction f_star_series(const Point& x) {
  Polynomial num(Rational(1)), den(Rational(1));
  for (const Rational& xi : x) {
    num *= Polynomial::linear_root(-(1 + xi));
    den *= Polynomial::linear_root(-(1 - xi));
  }
  return RationalFunction(num, den);
}

std::vector<Rational> h_star_values(const Point& x, int n) {
  std::vector<std::pair<Rational, Rational>> factors;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Rational s = static_cast<long>(i + 1);
    factors.emplace_back(s, s - x[i]);
  }
  return falling_basis_coeffs(laurent_of_product(factors, n), n);
}

Rational h_star_eval(int m, const Point& x) {
  if (m == 0) return 1;
  return h_star_values(x, m).back();
}

std::vector<Rational> super_h_star_values(const SuperPoint& sp, int n) {
  const Rational half(1, 2);
  std::vector<std::pair<Rational, Rational>> factors;
  const std::size_t k = std::max(sp.x.size(), sp.y.size());
  for (std::size_t i = 0; i < k; ++i) {
    Rational xi = i < sp.x.size() ? sp.x[i] : Rational();
    Rational yi = i < sp.y.size() ? sp.y[i] : Rational();
    factors.emplace_back(half + yi, half - xi);
  }
  return falling_basis_coeffs(laurent_of_product(factors, n), n);
}

}  // namespace mgraph
