#pragma once

#include <gmpxx.h>

namespace arithcx {

// Generalized binomial coefficient: zero for k < 0, otherwise the product
// formula a(a-1)...(a-k+1)/k!, valid for negative a.
mpz_class int_binom(const mpz_class& a, long k);

inline mpz_class int_binom(long a, long k) { return int_binom(mpz_class(a), k); }

// Ordinary binomial for nonnegative arguments, as a machine integer helper
// for basis sizes (callers keep n small enough that this cannot overflow).
long binom_count(int n, int k);

bool is_prime(long n);

} // namespace arithcx
