#include <doctest.h>

#include "arithcx/complex.hpp"
#include "arithcx/homology.hpp"
#include "arithcx/rng.hpp"

using namespace arithcx;

namespace {

std::vector<int> ones(int d) { return std::vector<int>(static_cast<std::size_t>(d), 1); }

ChainComplex<mpz_class> negative_complex(int m, int d) {
  return build_complex_over_Z(WeightVector::integer(-m - d - 1, ones(d))).chain;
}

// Count invariant factors divisible by p.
long p_factors(const AbelianGroup& g, long p) {
  long n = 0;
  for (const mpz_class& f : g.invariant_factors)
    if (f % p == 0) ++n;
  return n;
}

ZMatrix random_unimodular(Rng& rng, long n, ZMatrix& inverse) {
  ZMatrix u = ZMatrix::identity(n);
  inverse = ZMatrix::identity(n);
  for (int step = 0; step < 3 * n; ++step) {
    long i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
    if (i == j) continue;
    mpz_class q = rng.uniform(-2, 2);
    for (long c = 0; c < n; ++c) u(i, c) += q * u(j, c);       // row i += q row j
    for (long r = 0; r < n; ++r) inverse(r, j) -= q * inverse(r, i); // col j -= q col i
  }
  return u;
}

} // namespace

TEST_CASE("two-term complexes") {
  for (long m = 1; m <= 6; ++m) {
    auto c = build_complex_over_Z(WeightVector::integer(m, {1})).chain;
    AbelianGroup h0 = homology_Z(c, 0);
    CHECK(h0.free_rank == 0);
    REQUIRE(h0.invariant_factors.size() == 1);
    CHECK(h0.invariant_factors[0] == m + 1);
    CHECK(homology_Z(c, 1).is_trivial());
    CHECK(homology_Z(c, 5).is_trivial());
    CHECK(is_exact_over_Q(c));
  }
  // m = 0 gives the trivial quotient Z/1
  auto unit = build_complex_over_Z(WeightVector::integer(0, {1})).chain;
  CHECK(homology_Z(unit, 0).is_trivial());
}

TEST_CASE("zero differentials give free homology") {
  ChainComplex<mpz_class> c;
  c.lo = 0;
  c.ranks = {2, 3, 1};
  c.diffs = {ZMatrix(2, 3), ZMatrix(3, 1)};
  CHECK(homology_Z(c, 0) == AbelianGroup(2, {}));
  CHECK(homology_Z(c, 1) == AbelianGroup(3, {}));
  CHECK(homology_Z(c, 2) == AbelianGroup(1, {}));
  CHECK(!is_exact_over_Q(c));
}

TEST_CASE("malformed complexes are rejected") {
  ChainComplex<mpz_class> c;
  c.lo = 0;
  c.ranks = {1, 1, 1};
  c.diffs = {ZMatrix::identity(1), ZMatrix::identity(1)};
  CHECK_THROWS_AS(homology_Z(c, 1), std::invalid_argument);
}

TEST_CASE("homology of the d = 3 specialization against field ranks") {
  auto symbolic = build_complex(WeightVector::affine(+1, 0, ones(3)));
  for (long m : {0L, 1L, 2L, 5L}) {
    auto c = specialize(symbolic, m).chain;
    auto table = homology_table_Z(c);
    for (long p : {2L, 3L, 5L, 7L}) {
      ChainComplex<Fp> cp;
      cp.lo = c.lo;
      cp.ranks = c.ranks;
      for (const ZMatrix& diff : c.diffs) cp.diffs.push_back(to_mod_p(diff, p));
      for (int k = 0; k <= 3; ++k) {
        long dim = homology_field(cp, k);
        AbelianGroup at = table[k];
        AbelianGroup below = k > 0 ? table[k - 1] : AbelianGroup{};
        CHECK(dim == at.free_rank + p_factors(at, p) + p_factors(below, p));
      }
    }
  }
}

TEST_CASE("euler characteristic matches homology free ranks") {
  Rng rng(777);
  for (int trial = 0; trial < 12; ++trial) {
    int d = static_cast<int>(rng.uniform(1, 4));
    std::vector<int> tail(static_cast<std::size_t>(d));
    for (int& t : tail) t = static_cast<int>(rng.uniform(0, 4));
    auto c = build_complex_over_Z(WeightVector::integer(rng.uniform(-9, 9), tail)).chain;
    long chi = euler_characteristic(c);
    long homology_chi = 0;
    for (const auto& [k, group] : homology_table_Z(c))
      homology_chi += (k % 2 == 0) ? group.free_rank : -group.free_rank;
    CHECK(chi == homology_chi);
  }
}

TEST_CASE("homology is invariant under unimodular basis change") {
  Rng rng(2024);
  for (int trial = 0; trial < 8; ++trial) {
    int d = 3;
    auto c = negative_complex(static_cast<int>(rng.uniform(3, 6)), d);
    // conjugate: d_k' = P_{k-1} d_k P_k^{-1}
    std::vector<ZMatrix> p(static_cast<std::size_t>(d) + 1), p_inv(static_cast<std::size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
      p[static_cast<std::size_t>(k)] = random_unimodular(rng, c.rank_at(k), p_inv[static_cast<std::size_t>(k)]);
      REQUIRE(p[static_cast<std::size_t>(k)] * p_inv[static_cast<std::size_t>(k)] ==
              ZMatrix::identity(c.rank_at(k)));
    }
    ChainComplex<mpz_class> conjugated;
    conjugated.lo = c.lo;
    conjugated.ranks = c.ranks;
    for (int k = 1; k <= d; ++k)
      conjugated.diffs.push_back(p[static_cast<std::size_t>(k - 1)] * c.diff_at(k) *
                                 p_inv[static_cast<std::size_t>(k)]);
    REQUIRE(conjugated.dd_zero());
    for (int k = 0; k <= d; ++k) CHECK(homology_Z(conjugated, k) == homology_Z(c, k));
  }
}

TEST_CASE("rational exactness of negative-weight complexes") {
  for (int d = 2; d <= 4; ++d)
    for (int m = d; m <= d + 2; ++m) {
      auto c = negative_complex(m, d);
      CHECK(is_exact_over_Q(c));
      for (const auto& [k, group] : homology_table_Z(c)) CHECK(group.free_rank == 0);
    }
  // C(m, 1) for m >= 0: the 1x1 differential m+1 is a rational isomorphism
  for (long m = 0; m <= 5; ++m)
    CHECK(is_exact_over_Q(build_complex_over_Z(WeightVector::integer(m, {1})).chain));
}

TEST_CASE("field homology of exact complexes vanishes for good primes") {
  auto c = negative_complex(3, 2);
  // collect all torsion primes, then pick one coprime to everything
  ChainComplex<Fp> cp;
  cp.lo = c.lo;
  cp.ranks = c.ranks;
  for (const ZMatrix& diff : c.diffs) cp.diffs.push_back(to_mod_p(diff, 11));
  bool all_torsion_coprime_11 = true;
  for (const auto& [k, group] : homology_table_Z(c))
    for (const mpz_class& f : group.invariant_factors)
      if (f % 11 == 0) all_torsion_coprime_11 = false;
  REQUIRE(all_torsion_coprime_11);
  for (int k = 0; k <= 2; ++k) CHECK(homology_field(cp, k) == 0);
}
