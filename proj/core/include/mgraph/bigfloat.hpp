#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>

#include "mgraph/rational.hpp"

namespace mgraph {

// MPFR number with an explicit precision. Binary operations take the larger
// of the two operand precisions. Rounding is to nearest throughout.
class BigFloat {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  explicit BigFloat(mpfr_prec_t prec = kDefaultPrecision);
  BigFloat(const Rational& q, mpfr_prec_t prec = kDefaultPrecision);  // NOLINT
  BigFloat(long v, mpfr_prec_t prec);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  // "<decimal>@<bits>", or a plain decimal read at the default precision.
  static BigFloat parse(std::string_view s);
  // Decimal in scientific notation followed by "@<bits>".
  std::string str() const;
  // Decimal only; digits = 0 picks enough digits to round-trip.
  std::string decimal(int digits = 0) const;

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }

  BigFloat abs() const;
  static BigFloat gamma(const BigFloat& x);
  static BigFloat pow(const BigFloat& x, long e);

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat operator-() const;

  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_); }

  mpfr_srcptr get() const { return v_; }
  mpfr_ptr get() { return v_; }

 private:
  void widen_to(mpfr_prec_t p);
  mpfr_t v_;
};

}  // namespace mgraph
