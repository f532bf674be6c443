#include "mgraph/matrix.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "mgraph/errors.hpp"

namespace mgraph {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw ShapeError("matrix product: inner dimensions differ");
  RationalMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<Rational> RationalMatrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw ShapeError("matrix-vector product: size mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

Rational det(const RationalMatrix& m) {
  if (!m.is_square()) throw ShapeError("det: matrix is " + std::to_string(m.rows()) + "x" +
                                       std::to_string(m.cols()));
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(a(c, k), a(p, k));
      d = -d;
    }
    d *= a(c, c);
    Rational inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      Rational f = a(r, c) * inv;
      for (std::size_t k = c + 1; k < n; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

namespace {

void check_pfaffian_shape(const RationalMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0)
    throw ShapeError("pfaffian: need an even square matrix");
  if (!m.is_skew_symmetric()) throw ShapeError("pfaffian: matrix is not skew-symmetric");
}

Rational expand(const RationalMatrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) return 1;
  std::size_t a = idx[0];
  Rational total;
  for (std::size_t k = 1; k < idx.size(); ++k) {
    const Rational& e = m(a, idx[k]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t r = 1; r < idx.size(); ++r)
      if (r != k) rest.push_back(idx[r]);
    Rational term = e * expand(m, rest);
    if (k % 2 == 0) term = -term;
    total += term;
  }
  return total;
}

}  // namespace

Rational pfaffian_expansion(const RationalMatrix& m) {
  check_pfaffian_shape(m);
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return expand(m, idx);
}

Rational pfaffian_elimination(const RationalMatrix& m) {
  check_pfaffian_shape(m);
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational pf = 1;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < n; ++k) std::swap(a(i, k), a(j, k));
    for (std::size_t k = 0; k < n; ++k) std::swap(a(k, i), a(k, j));
  };
  // Congruence A -> E A E^T by unit triangular E keeps the Pfaffian.
  auto add_multiple = [&](std::size_t dst, std::size_t src, const Rational& f) {
    for (std::size_t k = 0; k < n; ++k) a(dst, k) -= f * a(src, k);
    for (std::size_t k = 0; k < n; ++k) a(k, dst) -= f * a(k, src);
  };
  for (std::size_t k = 0; k < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      swap_index(k + 1, p);
      pf = -pf;
    }
    const Rational piv = a(k, k + 1);
    pf *= piv;
    for (std::size_t i = k + 2; i < n; ++i)
      if (!a(k, i).is_zero()) add_multiple(i, k + 1, a(k, i) / piv);
    for (std::size_t i = k + 2; i < n; ++i)
      if (!a(k + 1, i).is_zero()) add_multiple(i, k, -a(k + 1, i) / piv);
  }
  return pf;
}

Rational pfaffian(const RationalMatrix& m) {
  return m.rows() <= 8 ? pfaffian_expansion(m) : pfaffian_elimination(m);
}

LuDecomposition::LuDecomposition(RationalMatrix a) : n_(a.rows()), lu_(std::move(a)), perm_(n_) {
  if (!lu_.is_square()) throw ShapeError("solve: matrix is not square");
  std::iota(perm_.begin(), perm_.end(), 0);
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && lu_(p, c).is_zero()) ++p;
    if (p == n_) throw SingularMatrixError("singular matrix (column " + std::to_string(c) + ")");
    if (p != c) {
      for (std::size_t k = 0; k < n_; ++k) std::swap(lu_(c, k), lu_(p, k));
      std::swap(perm_[c], perm_[p]);
    }
    Rational inv = lu_(c, c).inverse();
    for (std::size_t r = c + 1; r < n_; ++r) {
      if (lu_(r, c).is_zero()) continue;
      lu_(r, c) *= inv;
      const Rational f = lu_(r, c);
      for (std::size_t k = c + 1; k < n_; ++k)
        if (!lu_(c, k).is_zero()) lu_(r, k) -= f * lu_(c, k);
    }
  }
}

std::vector<Rational> LuDecomposition::solve(const std::vector<Rational>& b) const {
  if (b.size() != n_) throw ShapeError("solve: right-hand side has wrong length");
  std::vector<Rational> y(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational s = b[perm_[i]];
    for (std::size_t k = 0; k < i; ++k)
      if (!lu_(i, k).is_zero()) s -= lu_(i, k) * y[k];
    y[i] = std::move(s);
  }
  for (std::size_t i = n_; i-- > 0;) {
    Rational s = y[i];
    for (std::size_t k = i + 1; k < n_; ++k)
      if (!lu_(i, k).is_zero()) s -= lu_(i, k) * y[k];
    y[i] = s / lu_(i, i);
  }
  return y;
}

std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (!a.is_square() || a.rows() != b.size()) throw ShapeError("solve_linear: shape mismatch");
  return LuDecomposition(a).solve(b);
}

}  // namespace mgraph
