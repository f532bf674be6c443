#include "mgraph/functional.hpp"

#include <stdexcept>
#include <string>

#include "mgraph/enumerate.hpp"
#include "mgraph/errors.hpp"
#include "mgraph/series.hpp"
#include "mgraph/special.hpp"

namespace mgraph {

FunctionalSpec::FunctionalSpec(GeneratorFamily family, std::vector<Rational> values)
    : family_(family), values_(std::move(values)) {
  if (!values_.empty()) t_ = -values_[0];
}

FunctionalSpec FunctionalSpec::young_zz(const Rational& e, const Rational& t, int cap) {
  std::vector<Rational> g(cap);
  Rational p = 1;
  for (int m = 1; m <= cap; ++m) {
    const Rational i = m - 1;
    p *= (t + i * e + i * i) / Rational(m);
    g[m - 1] = m % 2 ? -p : p;
  }
  return FunctionalSpec(GeneratorFamily::HStar, std::move(g));
}

FunctionalSpec FunctionalSpec::schur_t(const Rational& t, int cap) {
  std::vector<Rational> g(cap);
  Rational p(1, 2);
  for (int m = 1; m <= cap; ++m) {
    p *= (2 * t + Rational((m - 1) * m)) / Rational(m);
    g[m - 1] = m % 2 ? -p : p;
  }
  return FunctionalSpec(GeneratorFamily::OneRowPStar, std::move(g));
}

FunctionalSpec FunctionalSpec::evaluation(const Point& x, int cap) {
  return FunctionalSpec(GeneratorFamily::HStar, h_star_values(x, cap));
}

FunctionalSpec FunctionalSpec::super_evaluation(const SuperPoint& sp, int cap) {
  return FunctionalSpec(GeneratorFamily::HStar, super_h_star_values(sp, cap));
}

FunctionalSpec FunctionalSpec::pstar_evaluation(const Point& x, int cap) {
  std::vector<Rational> c = extract_series_coeffs(f_star_series(x), cap);
  for (auto& v : c) v /= 2;
  return FunctionalSpec(GeneratorFamily::OneRowPStar, std::move(c));
}

const Rational& FunctionalSpec::g(int m) const {
  if (m == 0) return one_;
  if (m < 0 || m > degree_cap())
    throw std::out_of_range("functional: generator " + std::to_string(m) + " beyond degree cap " +
                            std::to_string(degree_cap()));
  return values_[m - 1];
}

namespace {

Rational basis_value(const Partition& rho, const std::vector<Rational>& h) {
  Rational p = 1;
  for (int r : rho.parts()) p *= h[r - 1];
  return p;
}

}  // namespace

GeneratorBasis::GeneratorBasis(int cap) : cap_(cap) {
  if (cap < 0) throw std::invalid_argument("GeneratorBasis: negative cap");
  diagrams_ = partitions_up_to(cap, GraphKind::young());
  const std::size_t n = diagrams_.size();
  RationalMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> h = cap ? h_star_values(point_of(diagrams_[i]), cap) : std::vector<Rational>{};
    for (std::size_t j = 0; j < n; ++j) a(i, j) = basis_value(diagrams_[j], h);
  }
  try {
    lu_ = std::make_unique<LuDecomposition>(std::move(a));
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("evaluation system for products of h* is singular at degree " +
                              std::to_string(cap));
  }
}

std::shared_ptr<const GeneratorBasis> GeneratorBasis::get(int cap) {
  static std::mutex m;
  static std::map<int, std::shared_ptr<const GeneratorBasis>> registry;
  {
    std::lock_guard lock(m);
    auto it = registry.find(cap);
    if (it != registry.end()) return it->second;
  }
  auto b = std::make_shared<const GeneratorBasis>(cap);
  std::lock_guard lock(m);
  return registry.emplace(cap, std::move(b)).first->second;
}

BasisExpansion GeneratorBasis::express(const std::vector<Rational>& target_values) const {
  std::vector<Rational> c = lu_->solve(target_values);
  BasisExpansion out;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (!c[j].is_zero()) out.emplace_back(diagrams_[j], std::move(c[j]));
  return out;
}

const BasisExpansion& GeneratorBasis::shifted_schur(const Partition& mu) const {
  if (mu.size() > cap_)
    throw std::out_of_range("s*_" + mu.str() + " exceeds the basis degree cap " + std::to_string(cap_));
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(mu);
    if (it != cache_.end()) return it->second;
  }
  std::vector<Rational> vals;
  vals.reserve(diagrams_.size());
  for (const Partition& lam : diagrams_) vals.push_back(shifted_schur_eval_det(mu, point_of(lam)));
  BasisExpansion e = express(vals);
  std::lock_guard lock(mu_);
  return cache_.emplace(mu, std::move(e)).first->second;
}

BasisExpansion express_in_generator_basis(const std::map<Partition, Rational>& target_values, int n) {
  auto basis = GeneratorBasis::get(n);
  std::vector<Rational> vals;
  for (const Partition& lam : basis->diagrams()) {
    auto it = target_values.find(lam);
    if (it == target_values.end())
      throw std::invalid_argument("express_in_generator_basis: missing value at " + lam.str());
    vals.push_back(it->second);
  }
  return basis->express(vals);
}

Rational apply_functional(const BasisExpansion& coeffs, const FunctionalSpec& spec) {
  if (spec.family() != GeneratorFamily::HStar)
    throw std::invalid_argument("apply_functional: expansion is over h* but the functional is given on P*_(m)");
  Rational total;
  for (const auto& [rho, c] : coeffs) {
    Rational p = c;
    for (int r : rho.parts()) p *= spec.g(r);
    total += p;
  }
  return total;
}

}  // namespace mgraph
