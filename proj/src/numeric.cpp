#include "arithcx/numeric.hpp"

#include <stdexcept>

namespace arithcx {

mpz_class int_binom(const mpz_class& a, long k) {
  if (k < 0) return 0;
  mpz_class r = 1;
  for (long i = 0; i < k; ++i) {
    r *= a - i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i + 1));
  }
  return r;
}

long binom_count(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class b = int_binom(mpz_class(n), k);
  if (!b.fits_slong_p()) throw std::overflow_error("binom_count overflow");
  return b.get_si();
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

} // namespace arithcx
