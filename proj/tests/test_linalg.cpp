#include <doctest.h>

#include "arithcx/abelian.hpp"
#include "arithcx/rng.hpp"
#include "arithcx/smith.hpp"

using namespace arithcx;

namespace {

ZMatrix from_rows(long rows, long cols, const std::vector<long>& e) {
  ZMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = e[static_cast<std::size_t>(r * cols + c)];
  return m;
}

ZMatrix random_matrix(Rng& rng, long rows, long cols, long bound) {
  ZMatrix m(rows, cols);
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m(r, c) = rng.uniform(-bound, bound);
  return m;
}

void check_decomposition(const ZMatrix& a) {
  SmithDecomposition snf = smith_normal_form(a);
  CHECK(snf.u * a * snf.v == snf.s);
  mpz_class du = det_int(snf.u), dv = det_int(snf.v);
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(snf.v * snf.v_inverse == ZMatrix::identity(a.cols()));
  auto diag = snf.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i) {
    CHECK(diag[i] >= 0);
    if (i > 0 && diag[i - 1] != 0) CHECK(diag[i] % diag[i - 1] == 0);
    if (i > 0 && diag[i - 1] == 0) CHECK(diag[i] == 0);
  }
  // off-diagonal zero
  for (long r = 0; r < snf.s.rows(); ++r)
    for (long c = 0; c < snf.s.cols(); ++c)
      if (r != c) CHECK(snf.s(r, c) == 0);
}

} // namespace

TEST_CASE("matrix product basics") {
  ZMatrix a = from_rows(2, 2, {1, 2, 3, 4});
  CHECK(ZMatrix::identity(2) * a == a);
  CHECK((a * ZMatrix(2, 3)).is_zero());
  CHECK_THROWS_AS(a * ZMatrix(3, 3), std::invalid_argument);
}

TEST_CASE("smith normal form examples") {
  SmithDecomposition id = smith_normal_form(ZMatrix::identity(3));
  CHECK(id.s == ZMatrix::identity(3));
  CHECK(id.rank == 3);

  SmithDecomposition zero = smith_normal_form(ZMatrix(2, 3));
  CHECK(zero.s.is_zero());
  CHECK(zero.rank == 0);

  // hand reduction: d1 = gcd = 2, d1*d2 = |det| = 8
  SmithDecomposition snf = smith_normal_form(from_rows(2, 2, {2, 4, 6, 8}));
  CHECK(snf.s == from_rows(2, 2, {2, 0, 0, 4}));
  check_decomposition(from_rows(2, 2, {2, 4, 6, 8}));
}

TEST_CASE("smith normal form properties on random matrices") {
  Rng rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    long rows = rng.uniform(1, 6), cols = rng.uniform(1, 6);
    check_decomposition(random_matrix(rng, rows, cols, 9));
  }
  // matrices with structure: products and scaled rows
  for (int trial = 0; trial < 20; ++trial) {
    ZMatrix a = random_matrix(rng, 4, 3, 4);
    ZMatrix b = random_matrix(rng, 3, 4, 4);
    check_decomposition(a * b);
  }
}

TEST_CASE("determinant examples") {
  CHECK(det_int(ZMatrix::identity(4)) == 1);
  CHECK(det_int(from_rows(2, 2, {2, 4, 6, 8})) == -8);
  CHECK(det_int(from_rows(3, 3, {-1, -2, -1, 0, 1, 1, 0, 0, -1})) == 1);
  CHECK(det_int(ZMatrix(0, 0)) == 1);
  CHECK_THROWS_AS(det_int(ZMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("determinant equals signed product of smith diagonal") {
  Rng rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    long n = rng.uniform(1, 5);
    ZMatrix a = random_matrix(rng, n, n, 7);
    mpz_class det = det_int(a);
    mpz_class prod = 1;
    for (const mpz_class& d : smith_normal_form(a).diagonal()) prod *= d;
    CHECK(abs(det) == prod);
  }
}

TEST_CASE("rank over fields") {
  CHECK(rank_over_field(to_rational(ZMatrix::identity(5))) == 5);
  CHECK(rank_over_field(to_rational(ZMatrix(3, 4))) == 0);
  for (long m = -4; m <= 4; ++m)
    CHECK(rank_over_Q(from_rows(1, 3, {2, -2, m + 1})) == 1);
  CHECK(rank_mod_p(from_rows(2, 2, {2, 4, 6, 8}), 2) == 0); // all entries even
  CHECK(rank_mod_p(from_rows(2, 2, {2, 4, 6, 8}), 3) == 2);
  CHECK(rank_mod_p(from_rows(2, 2, {1, 2, 3, 4}), 2) == 1);
}

TEST_CASE("rational rank equals count of nonzero smith entries") {
  Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    ZMatrix a = random_matrix(rng, rng.uniform(1, 5), rng.uniform(1, 5), 6);
    CHECK(rank_over_Q(a) == smith_normal_form(a).rank);
  }
}

TEST_CASE("Fp arithmetic") {
  Fp a(9, 7), b(5, 7);
  CHECK((a + b).value() == 0);
  CHECK((a * b).value() == 3);
  CHECK((a - b).value() == 4);
  CHECK((-b).value() == 2);
  CHECK(b.inverse() * b == Fp(1, 7));
  CHECK(Fp{} + a == a); // unbound zero adopts the modulus
  CHECK_THROWS_AS(Fp(1, 7) + Fp(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(Fp(0, 7).inverse(), std::domain_error);
}

TEST_CASE("abelian group rendering and validation") {
  CHECK(AbelianGroup{}.to_string() == "0");
  CHECK(AbelianGroup(1, {}).to_string() == "Z");
  CHECK(AbelianGroup(2, {2, 4}).to_string() == "Z^2 ⊕ Z/2 ⊕ Z/4");
  CHECK(AbelianGroup(0, {3}).to_string() == "Z/3");
  CHECK_THROWS_AS(AbelianGroup(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(AbelianGroup(0, {2, 3}), std::invalid_argument);
}
