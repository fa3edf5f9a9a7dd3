#include "doctest.h"
#include "kflat/field.hpp"

using namespace kflat;

TEST_SUITE("field") {

TEST_CASE("rationals normalize to lowest terms") {
  FieldSpec Q;
  CHECK(Q.isRationals());
  CHECK(Q.characteristic() == 0);
  CHECK(Q.norm(mpq_class(3, 6)) == mpq_class(1, 2));
  CHECK(Q.inv(mpq_class(-2)) == mpq_class(-1, 2));
  CHECK(Q.div(mpq_class(3), mpq_class(4)) == mpq_class(3, 4));
}

TEST_CASE("prime field canonical residues") {
  FieldSpec F7 = FieldSpec::prime(7);
  CHECK(F7.isPrime());
  CHECK(F7.characteristic() == 7);
  CHECK(F7.norm(mpq_class(10)) == 3);
  CHECK(F7.neg(mpq_class(1)) == 6);
  CHECK(F7.inv(mpq_class(3)) == 5);
  CHECK(F7.div(mpq_class(1), mpq_class(2)) == 4);
  CHECK(F7.fromLong(-1) == 6);
  CHECK(F7.norm(mpq_class(1, 3)) == 5);
  CHECK(F7.mul(F7.fromLong(3), F7.fromLong(5)) == 1);
}

TEST_CASE("zero has no inverse") {
  CHECK_THROWS(FieldSpec::rationals().inv(mpq_class(0)));
  CHECK_THROWS(FieldSpec::prime(5).inv(mpq_class(5)));
}

TEST_CASE("string form round trips") {
  CHECK(FieldSpec::rationals().str() == "Q");
  CHECK(FieldSpec::prime(31).str() == "Fp:31");
  CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("Fp:5") == FieldSpec::prime(5));
  CHECK_THROWS(FieldSpec::parse("Fp:4"));
}

TEST_CASE("multinomial vanishing follows base-p digits") {
  FieldSpec Q;
  FieldSpec F2 = FieldSpec::prime(2), F3 = FieldSpec::prime(3);
  CHECK(multinomial_exact(4, {2, 2}) == 6);
  CHECK(multinomial_exact(5, {2, 2, 1}) == 30);
  CHECK(multinomial_exact(6, {6}) == 1);
  CHECK(multinomial_nonzero(Q, 4, {2, 2}));
  CHECK(multinomial_nonzero(F3, 4, {3, 1}));   // C(4,3) = 4
  CHECK(!multinomial_nonzero(F3, 4, {2, 2}));  // C(4,2) = 6
  CHECK(!multinomial_nonzero(F2, 2, {1, 1}));
  CHECK(multinomial_nonzero(F2, 3, {2, 1}));   // C(3,2) = 3
}

}
