#include "mgraph/pstar.hpp"

#include <stdexcept>
#include <string>

#include "mgraph/series.hpp"

namespace mgraph {

std::vector<Rational> pstar_one_row_values(const Point& x, int n) {
  std::vector<Rational> c = extract_series_coeffs(f_star_series(x), n);
  for (auto& v : c) v /= 2;
  return c;
}

std::vector<Rational> pstar_one_row_values(const FunctionalSpec& spec, int n) {
  if (spec.family() != GeneratorFamily::OneRowPStar)
    throw std::invalid_argument("functional is not given on one-row P* generators");
  if (n > spec.degree_cap())
    throw std::out_of_range("one-row values requested beyond degree cap " + std::to_string(spec.degree_cap()));
  return std::vector<Rational>(spec.values().begin(), spec.values().begin() + n);
}

TwoRowTable::TwoRowTable(std::vector<Rational> one_row)
    : v_(std::move(one_row)), s_(static_cast<int>(v_.size())), t_((s_ + 1) * (s_ + 1)) {
  v_.insert(v_.begin(), Rational(1));
  // Seed b = 1, then raise b using the relation at (p, q) = (a, b-1).
  for (int b = 1; b < s_; ++b) {
    for (int a = b + 1; a + b <= s_; ++a) {
      if (b == 1) {
        at(a, 1) = v_[a] * v_[1] - Rational(a) * v_[a] - v_[a + 1];
      } else {
        const int p = a, q = b - 1;
        at(a, b) = v_[p] * v_[q + 1] - v_[p + 1] * v_[q] - Rational(p - q) * v_[p] * v_[q] -
                   (*this)(p + 1, q) - Rational(p + q) * (*this)(p, q);
      }
    }
  }
}

const Rational& TwoRowTable::one_row(int m) const {
  if (m < 0 || m > s_) throw std::out_of_range("one-row value P*_(" + std::to_string(m) + ") not available");
  return v_[m];
}

Rational TwoRowTable::operator()(int p, int q) const {
  if (p == q) return 0;
  if (p < q) return -(*this)(q, p);
  if (q == 0) return one_row(p);
  if (p + q > s_)
    throw std::out_of_range("P*_(" + std::to_string(p) + "," + std::to_string(q) +
                            ") needs one-row values up to " + std::to_string(p + q));
  return at(p, q);
}

Rational pstar_two_row(const std::vector<Rational>& one_row, int p, int q) {
  return TwoRowTable(one_row)(p, q);
}

RationalMatrix pstar_pfaffian_matrix(const StrictPartition& mu, const TwoRowTable& table) {
  const int l = mu.length();
  const int n = l + (l % 2);
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // The border index carries part 0: entries P*_(mu_i, 0) = P*_(mu_i).
      Rational v = table(mu[i + 1], mu[j + 1]);
      m(i, j) = v;
      m(j, i) = -v;
    }
  return m;
}

Rational pstar_eval(const StrictPartition& mu, const TwoRowTable& table) {
  if (mu.length() == 0) return 1;
  return pfaffian(pstar_pfaffian_matrix(mu, table));
}

Rational pstar_eval(const StrictPartition& mu, const Point& x) {
  if (mu.length() == 0) return 1;
  return pstar_eval(mu, TwoRowTable(pstar_one_row_values(x, mu.size())));
}

Rational pstar_eval(const StrictPartition& mu, const FunctionalSpec& spec) {
  if (mu.length() == 0) return 1;
  return pstar_eval(mu, TwoRowTable(pstar_one_row_values(spec, mu.size())));
}

}  // namespace mgraph
