#include <doctest.h>

#include "arithcx/json_io.hpp"

using namespace arithcx;

TEST_CASE("integer encoding switches to strings beyond 64 bits") {
  CHECK(mpz_to_json(mpz_class(42)) == json(42));
  CHECK(mpz_to_json(mpz_class(-7)) == json(-7));
  mpz_class big("123456789012345678901234567890");
  CHECK(mpz_to_json(big) == json("123456789012345678901234567890"));
}

TEST_CASE("matrix serialization carries the ring tag") {
  ZMatrix m(1, 2);
  m(0, 0) = 3;
  m(0, 1) = -4;
  json j = matrix_to_json(m);
  CHECK(j["ring"] == "Z");
  CHECK(j["rows"] == 1);
  CHECK(j["cols"] == 2);
  CHECK(j["entries"][0][1] == -4);

  FpMatrix f(1, 1);
  f(0, 0) = Fp(9, 7);
  CHECK(matrix_to_json(f)["ring"] == "Fp:7");

  Matrix<IVPoly> p(1, 1);
  p(0, 0) = parse_ivpoly("C(x+2,2)");
  json jp = matrix_to_json(p);
  CHECK(jp["ring"] == "IVPoly");
  CHECK(jp["entries"][0][0] == json::array({1, 2, 1}));
}

TEST_CASE("complex serialization includes weights, bases, differentials") {
  auto c = build_complex(parse_weight_vector("x", "1,1"));
  json j = complex_to_json(c);
  CHECK(j["weights"]["w0"] == "x");
  CHECK(j["weights"]["tail"] == json::array({1, 1}));
  CHECK(j["d"] == 2);
  CHECK(j["degrees"][0]["basis"] == json::array({json::array({0, 0, 0})}));
  CHECK(j["differentials"].size() == 2);
}

TEST_CASE("group and report serialization") {
  CHECK(group_to_json(AbelianGroup(2, {2, 6})) ==
        json({{"free_rank", 2}, {"torsion", {2, 6}}}));
  Report r;
  r.claim = "demo";
  r.add({"demo", 1, true, std::nullopt});
  r.add({"demo", 2, false, Witness{0, 1, "a", "b"}});
  json j = report_to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["witness"]["col"] == 1);
}
