#include "mgraph/gauss.hpp"

#include "mgraph/errors.hpp"
#include "mgraph/special.hpp"

namespace mgraph {

namespace {

bool nonpositive_integer(const Rational& x) { return x.is_integer() && x.sign() <= 0; }

}  // namespace

GaussReport gauss_2f1_report(const Rational& a, const Rational& b, const Rational& c, const BigFloat& tol,
                             mpfr_prec_t prec, long max_terms) {
  if (nonpositive_integer(c)) throw ParameterError("2F1: c must not be a nonpositive integer");
  const Rational s = c - a - b;
  if (s.sign() <= 0) throw ParameterError("2F1 at 1 diverges unless c - a - b > 0");

  GaussReport r{BigFloat(prec), BigFloat(prec), BigFloat(prec)};
  const Rational* neg = nonpositive_integer(a) ? &a : (nonpositive_integer(b) ? &b : nullptr);
  if (neg) {
    // Chu-Vandermonde.
    const Rational& other = neg == &a ? b : a;
    const int n = static_cast<int>((-*neg).num().get_si());
    r.terminating = true;
    r.closed_form = BigFloat(pochhammer(c - other, n) / pochhammer(c, n), prec);
  } else {
    BigFloat num = BigFloat::gamma(BigFloat(c, prec)) * BigFloat::gamma(BigFloat(s, prec));
    BigFloat den = BigFloat::gamma(BigFloat(c - a, prec)) * BigFloat::gamma(BigFloat(c - b, prec));
    r.closed_form = num / den;
  }

  // Stop once the tail estimate |term| * m / s falls below tol / 1024.
  BigFloat term(1L, prec), sum(prec);
  const BigFloat cutoff = tol / BigFloat(1024L, prec);
  const BigFloat bs(s, prec);
  long m = 0;
  for (; m < max_terms; ++m) {
    sum += term;
    if (term.sign() == 0) break;
    Rational ratio = (a + m) * (b + m) / ((c + m) * Rational(m + 1));
    term *= BigFloat(ratio, prec);
    BigFloat tail = term.abs() * BigFloat(m + 1, prec) / bs;
    if (m > 8 && tail < cutoff) {
      sum += term;
      ++m;
      break;
    }
  }
  r.terms = m + 1;
  r.partial_sum = sum;
  r.abs_diff = (sum - r.closed_form).abs();
  r.pass = r.abs_diff <= tol;
  return r;
}

bool gauss_2f1_check(const Rational& a, const Rational& b, const Rational& c, const BigFloat& tol,
                     mpfr_prec_t prec) {
  return gauss_2f1_report(a, b, c, tol, prec).pass;
}

}  // namespace mgraph
