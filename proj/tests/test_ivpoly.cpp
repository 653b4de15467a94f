#include <doctest.h>

#include <functional>
#include <vector>

#include "arithcx/ivpoly.hpp"
#include "arithcx/numeric.hpp"
#include "arithcx/rng.hpp"

using namespace arithcx;

namespace {

// Test-only interpolation oracle: forward differences of values produced by
// an arbitrary integer function, built on int_binom only (independent of the
// IVPoly arithmetic it checks).
std::vector<mpz_class> difference_oracle(const std::function<mpz_class(long)>& f, long n) {
  std::vector<mpz_class> v;
  for (long i = 0; i <= n; ++i) v.push_back(f(i));
  for (std::size_t level = 1; level < v.size(); ++level)
    for (std::size_t i = v.size() - 1; i >= level; --i) v[i] -= v[i - 1];
  return v;
}

IVPoly random_poly(Rng& rng, long max_degree) {
  std::vector<mpz_class> c(static_cast<std::size_t>(rng.uniform(0, max_degree)) + 1);
  for (mpz_class& x : c) x = rng.uniform(-9, 9);
  return IVPoly::from_coeffs(std::move(c));
}

} // namespace

TEST_CASE("int_binom generalized values") {
  CHECK(int_binom(-3, 2) == 6);
  CHECK(int_binom(5, 2) == 10);
  CHECK(int_binom(4, -1) == 0);
  CHECK(int_binom(0, 0) == 1);
  CHECK(int_binom(-1, 3) == -1);
  CHECK(int_binom(mpz_class("1000000000000"), 2) == mpz_class("499999999999500000000000"));
}

TEST_CASE("addition basics") {
  IVPoly p = IVPoly::from_coeffs({3, -1, 2});
  CHECK(p + IVPoly() == p);
  CHECK(IVPoly::x() + IVPoly::x() == IVPoly::from_coeffs({0, 2}));
  IVPoly b = affine_binom(+1, 3, 2);
  CHECK((b + (-b)).is_zero());
}

TEST_CASE("multiplication against frozen finite-difference values") {
  // C(x,1)^2 = x^2 interpolated at 0,1,2
  CHECK(IVPoly::x() * IVPoly::x() == IVPoly::from_coeffs({0, 1, 2}));
  // C(x,2)*C(x,1): values 0,0,2,9 at x=0..3 give differences (0,0,2,3)
  IVPoly p = affine_binom(+1, 0, 2) * IVPoly::x();
  CHECK(p == IVPoly::from_coeffs({0, 0, 2, 3}));
  CHECK(p * IVPoly(1) == p);
}

TEST_CASE("multiplication matches the independent difference oracle") {
  for (long m = 0; m <= 5; ++m)
    for (long n = 0; n <= 5; ++n) {
      IVPoly product = affine_binom(+1, 0, m) * affine_binom(+1, 0, n);
      auto expected = difference_oracle(
          [&](long i) -> mpz_class { return int_binom(i, m) * int_binom(i, n); }, m + n);
      CHECK(product == IVPoly::from_coeffs(expected));
    }
}

TEST_CASE("evaluation is a ring homomorphism at sampled points") {
  Rng rng(20240817);
  for (int trial = 0; trial < 50; ++trial) {
    IVPoly p = random_poly(rng, 6);
    IVPoly q = random_poly(rng, 6);
    long m = rng.uniform(-15, 15);
    CHECK((p * q).eval(m) == p.eval(m) * q.eval(m));
    CHECK((p + q).eval(m) == p.eval(m) + q.eval(m));
  }
}

TEST_CASE("affine_binom values and conventions") {
  CHECK(affine_binom(-1, -3, 3) == -affine_binom(+1, 5, 3)); // -C(x+5,3)
  CHECK(affine_binom(+1, 7, 0) == IVPoly(1));
  CHECK(affine_binom(+1, -4, 0) == IVPoly(1));
  CHECK(affine_binom(+1, 3, -2).is_zero());
  CHECK(affine_binom(+1, 3, 2) == IVPoly::from_coeffs({3, 3, 1}));
  // frozen: differences of C(x+3,2) at 0,1,2 are 3,3,1
  auto diffs = difference_oracle([](long i) { return int_binom(i + 3, 2); }, 2);
  CHECK(affine_binom(+1, 3, 2) == IVPoly::from_coeffs(diffs));
}

TEST_CASE("evaluation examples") {
  CHECK(affine_binom(+1, 3, 2).eval(1) == 6); // C(4,2)
  CHECK(IVPoly().eval(17) == 0);
  CHECK(affine_binom(-1, -3, 3).eval(2) == -35); // -C(7,3)
  CHECK(affine_binom(-1, -3, 3).eval(2) == int_binom(-2 - 3, 3));
}

TEST_CASE("negation identity for affine binomials as polynomial equality") {
  for (long m = 0; m <= 12; ++m)
    for (long n = 0; n <= 12; ++n) {
      IVPoly lhs = affine_binom(-1, -m, n);
      IVPoly rhs = affine_binom(+1, m + n - 1, n);
      if (n % 2 != 0) rhs = -rhs;
      CHECK(lhs == rhs);
    }
}

TEST_CASE("interpolation round trip") {
  Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    IVPoly p = random_poly(rng, 8);
    std::vector<mpz_class> values;
    for (long i = 0; i <= p.degree(); ++i) values.push_back(p.eval(i));
    if (p.is_zero()) values.push_back(0);
    CHECK(interpolate(values) == p);
  }
}

TEST_CASE("rendering") {
  CHECK(affine_binom(+1, 3, 2).to_basis_string() == "3 + 3*C(x,1) + C(x,2)");
  CHECK(affine_binom(+1, 3, 2).to_string() == "C(x+3,2)");
  CHECK((-affine_binom(+1, 5, 3)).to_string() == "-C(x+5,3)");
  CHECK(IVPoly::from_coeffs({3, 1}).to_string() == "x+3");
  CHECK(IVPoly::from_coeffs({-5, -1}).to_string() == "-x-5");
  CHECK(IVPoly(-7).to_string() == "-7");
  CHECK(IVPoly().to_string() == "0");
}

TEST_CASE("parsing") {
  CHECK(parse_ivpoly("x") == IVPoly::x());
  CHECK(parse_ivpoly("-x-6") == IVPoly::from_coeffs({-6, -1}));
  CHECK(parse_ivpoly("17") == IVPoly(17));
  CHECK(parse_ivpoly("C(x+2,2)") == affine_binom(+1, 2, 2));
  CHECK(parse_ivpoly("-C(x+5,3)") == -affine_binom(+1, 5, 3));
  CHECK(parse_ivpoly("C(-x+1,3)") == affine_binom(-1, 1, 3));
  CHECK(parse_affine("-x-6") == std::pair<int, long>{-1, -6});
  CHECK(parse_affine("x+3") == std::pair<int, long>{+1, 3});
  CHECK_THROWS_AS(parse_ivpoly("bogus("), std::invalid_argument);
  CHECK_THROWS_AS(parse_affine("x+"), std::invalid_argument);
}

TEST_CASE("round trip through rendering") {
  Rng rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    int sign = rng.uniform(0, 1) == 0 ? +1 : -1;
    IVPoly p = affine_binom(sign, rng.uniform(-8, 8), rng.uniform(0, 5));
    if (rng.uniform(0, 1) == 0) p = -p;
    CHECK(parse_ivpoly(p.to_string()) == p);
  }
}
