#pragma once

#include "mgraph/bigfloat.hpp"
#include "mgraph/rational.hpp"

namespace mgraph {

struct GaussReport {
  BigFloat partial_sum;
  BigFloat closed_form;
  BigFloat abs_diff;
  long terms = 0;
  bool terminating = false;
  bool pass = false;
};

// Partial sums of sum_m (a)_m (b)_m / ((c)_m m!) against
// Gamma(c) Gamma(c-a-b) / (Gamma(c-a) Gamma(c-b)). When a or b is a
// nonpositive integer the closed form is the exact (c-b)_N / (c)_N.
GaussReport gauss_2f1_report(const Rational& a, const Rational& b, const Rational& c, const BigFloat& tol,
                             mpfr_prec_t prec = BigFloat::kDefaultPrecision, long max_terms = 1000000);

bool gauss_2f1_check(const Rational& a, const Rational& b, const Rational& c, const BigFloat& tol,
                     mpfr_prec_t prec = BigFloat::kDefaultPrecision);

}  // namespace mgraph
