#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mgraph/rational.hpp"

namespace mgraph {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_skew_symmetric() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  RationalMatrix transpose() const;
  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> operator*(const std::vector<Rational>& v) const;
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Exact Gaussian elimination.
Rational det(const RationalMatrix& m);

// Recursive expansion up to size 8, skew elimination above.
Rational pfaffian(const RationalMatrix& m);
Rational pfaffian_expansion(const RationalMatrix& m);
Rational pfaffian_elimination(const RationalMatrix& m);

// PA = LU with exact pivoting on the first nonzero entry; reusable for many
// right-hand sides.
class LuDecomposition {
 public:
  explicit LuDecomposition(RationalMatrix a);
  std::vector<Rational> solve(const std::vector<Rational>& b) const;
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  RationalMatrix lu_;
  std::vector<std::size_t> perm_;
};

std::vector<Rational> solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

}  // namespace mgraph
