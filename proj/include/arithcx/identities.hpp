#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

#include "arithcx/composition.hpp"
#include "arithcx/rng.hpp"

namespace arithcx {

// Context for the binomial-product identities behind the chain-map proof: a
// pair of interleaved compositions lam (t parts summing to d-t+1) and mu
// (t+1 parts summing to d-t).
struct CompositionPair {
  int d = 0;
  int t = 0;
  Composition lam;
  Composition mu;

  CompositionPair(int d, Composition lam, Composition mu);
  std::string to_string() const;
};

// The four quantities A_k, B_k, g_k(z), h_k(z); 1 <= k <= t, z any integer.
mpz_class factor_a(const CompositionPair& ctx, int k);
mpz_class factor_b(const CompositionPair& ctx, int k);
mpz_class factor_g(const CompositionPair& ctx, int k, long z);
mpz_class factor_h(const CompositionPair& ctx, int k, long z);

// The product/step relations:
//   g_1(lam_1 + 1) = 0,
//   A_k * g_k(0) = A_{k+1}  and  h_k(0) = g_{k+1}(lam_{k+1} + 1)  (k < t),
//   B_k = B_{k+1} * h_{k+1}(lam_{k+1} + 1)                        (k < t-1),
//   A_t * g_t(0) = 0.
bool product_step_check(const CompositionPair& ctx);

// The alternating-sum consequence:
//   sum_{k=1}^{t-1} (-1)^{t-k} A_k B_k [h_k(lam_k+1) g_k(lam_k+1)
//                                       + g_k(0) h_k(0)]
//     = -A_t * g_t(lam_t + 1).
bool alternating_sum_check(const CompositionPair& ctx);

// C(m+n, r) = sum_k C(m,k) C(n, r-k) for nonnegative m, n, r.
bool vandermonde_check(long m, long n, long r);

// sum_{j>=0} C(b,j) C(y+a, a-b+1+j) C(y+a+b+c-j, c-j)
//   = C(y+a+c, a-b+c+1) C(a+c+1, c),
// checked as a polynomial identity in y (strictly stronger than sampling).
// The sum runs over 0 <= j <= min(b, c); later terms vanish.
bool szekely_check(long a, long b, long c);

// Every admissible context with d' <= dmax (all t, lam, mu).
std::vector<CompositionPair> exhaustive_pairs(int dmax);

// Uniform over d in [1, dmax], t in [max(2,1)..d] for the sum check, then a
// uniform basis label on each side.
CompositionPair random_pair(Rng& rng, int dmax, int min_t);

struct FuzzRecord {
  std::string identity;
  std::string context; // JSON fragment describing the inputs
  bool pass = true;
};

std::vector<FuzzRecord> fuzz_composition_identities(std::uint64_t seed, int count, int dmax);
std::vector<FuzzRecord> fuzz_vandermonde(std::uint64_t seed, int count, long max_value);
std::vector<FuzzRecord> fuzz_szekely(std::uint64_t seed, int count, long max_value);

} // namespace arithcx
