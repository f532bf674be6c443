#pragma once

#include <vector>

#include "mgraph/rational.hpp"

namespace mgraph {

// (t)_n = t(t+1)...(t+n-1)
Rational pochhammer(const Rational& t, int n);
// (a|k) = a(a-1)...(a-k+1)
Rational falling_factorial(const Rational& a, int k);
Rational factorial(int n);
Rational binomial(int n, int k);

// Rows 0..n of the Stirling numbers of the second kind, S[n][k].
std::vector<std::vector<Rational>> stirling2_table(int n);

}  // namespace mgraph
