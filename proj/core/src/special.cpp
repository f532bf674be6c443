#include "mgraph/special.hpp"

#include <stdexcept>

namespace mgraph {

Rational pochhammer(const Rational& t, int n) {
  if (n < 0) throw std::invalid_argument("pochhammer: negative length");
  Rational r = 1;
  for (int i = 0; i < n; ++i) r *= t + i;
  return r;
}

Rational falling_factorial(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative length");
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= a - i;
  return r;
}

Rational factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(z);
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class z;
  mpz_bin_uiui(z.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(z);
}

std::vector<std::vector<Rational>> stirling2_table(int n) {
  std::vector<std::vector<Rational>> s(n + 1, std::vector<Rational>(n + 1));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) s[i][k] = Rational(k) * s[i - 1][k] + s[i - 1][k - 1];
  return s;
}

}  // namespace mgraph
