#pragma once

#include <utility>
#include <vector>

#include "mgraph/poly.hpp"
#include "mgraph/symmetric.hpp"

namespace mgraph {

// Coefficients c_0..c_n of the expansion of f(u) in powers of 1/u around
// u = infinity. f must be proper (deg num <= deg den).
std::vector<Rational> laurent_at_infinity(const RationalFunction& f, int n);

// Same for prod_i (u + a_i)/(u + b_i), without forming the rational function.
std::vector<Rational> laurent_of_product(const std::vector<std::pair<Rational, Rational>>& factors, int n);

// g_1..g_n with f(u) = 1 + sum_m g_m / (u|m), from the Laurent coefficients
// (c_0 must be 1). Uses 1/(u|m) = sum_{k>=m} S(k-1, m-1) u^-k.
std::vector<Rational> falling_basis_coeffs(const std::vector<Rational>& laurent, int n);
std::vector<Rational> extract_series_coeffs(const RationalFunction& f, int n);

// prod (u+i)/(u+i-x_i)
RationalFunction h_star_series(const Point& x);
// prod (u+1+x_i)/(u+1-x_i)
RationalFunction f_star_series(const Point& x);

// h*_1..h*_n at x.
std::vector<Rational> h_star_values(const Point& x, int n);
Rational h_star_eval(int m, const Point& x);

// Coefficients of prod (u+1/2+y_i)/(u+1/2-x_i), i.e. the super evaluation of
// h*_1..h*_n.
std::vector<Rational> super_h_star_values(const SuperPoint& sp, int n);

}  // namespace mgraph
