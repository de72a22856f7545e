#pragma once

#include <gmpxx.h>

namespace narayana {

using Integer = mpz_class;
using Rational = mpq_class;

// Zero whenever k < 0, n < 0 or k > n.
Integer binomial(long n, long k);
Integer factorial(long n);
// (2m-1)!! for m >= 0, with (-1)!! = 1.
Integer double_factorial_odd(long m);
Integer catalan(long n);
// (1/n) C(n,k) C(n,k-1); zero outside 1 <= k <= n.
Rational narayana_number(long n, long k);

}  // namespace narayana
