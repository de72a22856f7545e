#include "narayana/combinatorics.hpp"

namespace narayana {

Integer binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) return 0;
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer double_factorial_odd(long m) {
  Integer r = 1;
  for (long j = 3; j <= 2 * m - 1; j += 2) r *= j;
  return r;
}

Integer catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

Rational narayana_number(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  Rational r(binomial(n, k) * binomial(n, k - 1), Integer(n));
  r.canonicalize();
  return r;
}

}  // namespace narayana
