#include "mgraph/bigfloat.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "mgraph/errors.hpp"

namespace mgraph {

BigFloat::BigFloat(mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const Rational& q, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_q(v_, q.mpq().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, mpfr_prec_t prec) {
  mpfr_init2(v_, prec);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, o.precision());
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  mpfr_init2(v_, o.precision());
  mpfr_swap(v_, o.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, o.precision());
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

void BigFloat::widen_to(mpfr_prec_t p) {
  if (p > precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
}

BigFloat BigFloat::parse(std::string_view s) {
  std::string text(s);
  mpfr_prec_t prec = kDefaultPrecision;
  auto at = text.find('@');
  if (at != std::string::npos) {
    std::string tag = text.substr(at + 1);
    char* end = nullptr;
    long p = std::strtol(tag.c_str(), &end, 10);
    if (tag.empty() || *end != '\0' || p < MPFR_PREC_MIN)
      throw ParseError("bad precision tag in '" + text + "'");
    prec = static_cast<mpfr_prec_t>(p);
    text.resize(at);
  }
  BigFloat out(prec);
  if (text.empty() || mpfr_set_str(out.v_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("not a decimal: '" + std::string(s) + "'");
  return out;
}

std::string BigFloat::decimal(int digits) const {
  if (digits <= 0)
    digits = static_cast<int>(std::ceil(static_cast<double>(precision()) * 0.30102999566398120)) + 1;
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string BigFloat::str() const { return decimal() + "@" + std::to_string(precision()); }

BigFloat BigFloat::abs() const {
  BigFloat r(precision());
  mpfr_abs(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::gamma(const BigFloat& x) {
  BigFloat r(x.precision());
  mpfr_gamma(r.v_, x.v_, MPFR_RNDN);
  return r;
}

BigFloat BigFloat::pow(const BigFloat& x, long e) {
  BigFloat r(x.precision());
  mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  widen_to(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

}  // namespace mgraph
