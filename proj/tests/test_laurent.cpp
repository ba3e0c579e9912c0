#include "oinf/laurent.hpp"

#include <doctest.h>

using namespace oinf;

TEST_CASE("laurent arithmetic") {
  LaurentV q = LaurentV::q_power(1);
  LaurentV one = LaurentV::one();
  LaurentV p = q * q - q + one;  // q^2 - q + 1
  CHECK(p.coeff(4) == 1);
  CHECK(p.coeff(2) == -1);
  CHECK(p.coeff(0) == 1);
  CHECK(p.eval_one() == 1);
  CHECK(p.pure_q());
  CHECK((p - p).is_zero());
}

TEST_CASE("bar negates exponents") {
  LaurentV v = LaurentV::monomial(Int(3), 1);
  CHECK(v.bar().coeff(-1) == 3);
  LaurentV p = LaurentV::q_power(2) + LaurentV::q_power(-1);
  CHECK(p.bar() == LaurentV::q_power(-2) + LaurentV::q_power(1));
  CHECK(p.bar().bar() == p);
}

TEST_CASE("q coefficient lists round-trip") {
  LaurentV p = LaurentV::q_power(0) + LaurentV::q_power(2) + LaurentV::q_power(2);
  auto cs = p.q_coeff_list();
  REQUIRE(cs.size() == 3);
  CHECK(cs[0] == 1);
  CHECK(cs[1] == 0);
  CHECK(cs[2] == 2);
  CHECK(LaurentV::from_q_coeff_list(cs) == p);
}

TEST_CASE("zero coefficients are never stored") {
  LaurentV p;
  p.add_term(3, Int(2));
  p.add_term(3, Int(-2));
  CHECK(p.is_zero());
  CHECK(p.coeffs().empty());
}
