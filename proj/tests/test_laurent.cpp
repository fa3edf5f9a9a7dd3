#include "doctest.h"
#include "helpers.hpp"

using namespace kflat;
using kt::pp;
using kt::qring;

namespace {

LaurentPoly lp(const std::string& src) {
  static RingPtr scalars = qring({});
  return parse_laurent(src, scalars, "u");
}

}  // namespace

TEST_SUITE("laurent") {

TEST_CASE("split a polynomial along one variable") {
  auto r = qring({"x", "y"});
  LaurentPoly s = LaurentPoly::splitPoly(pp(r, "x^2*y + x"), "x");
  CHECK(s.lvar() == "x");
  CHECK(s.base()->vars == std::vector<std::string>{"y"});
  CHECK(s.coeff(2) == Poly::variable(s.base(), "y"));
  CHECK(s.coeff(1) == Poly::constant(s.base(), 1));
  CHECK(s.coeff(0).isZero());
  CHECK(s.ord() == 1);
  CHECK(s.topExp() == 2);
}

TEST_CASE("pole order and residue") {
  LaurentPoly f = lp("u^-1 + 3");
  CHECK(f.ord() == -1);
  CHECK(f.poleOrder() == 1);
  CHECK(f.residue() == Poly::constant(f.base(), 1));
  CHECK(lp("5 + u^2").poleOrder() == 0);
  CHECK(LaurentPoly::zero(qring({}), "u").ord() == 0);
}

TEST_CASE("laurent arithmetic") {
  CHECK(lp("u + u^-1") * lp("u - u^-1") == lp("u^2 - u^-2"));
  CHECK(lp("u^-1").shifted(2) == lp("u"));
  CHECK(lp("u^-1 + 1").pow(2) == lp("u^-2 + 2*u^-1 + 1"));
  CHECK((lp("u^-1") - lp("u^-1")).isZero());
  CHECK(lp("2*u").scaled(mpq_class(1, 2)) == lp("u"));
}

TEST_CASE("polar and regular parts") {
  LaurentPoly f = lp("u^-2 + 5 + u^3");
  CHECK(f.strictPolarPart() == lp("u^-2"));
  CHECK(f.regularPart() == lp("5 + u^3"));
  CHECK(f.nonpositivePart() == lp("u^-2 + 5"));
  CHECK(f.strictPolarPart() + f.regularPart() == f);
}

TEST_CASE("evaluation at a scalar") {
  Poly v = lp("2*u^-1 + 3 + u").evalAt(2);
  CHECK(v == Poly::constant(qring({}), 6));
}

TEST_CASE("conversion to a plain polynomial") {
  auto r = qring({"y", "u"});
  auto base = qring({"y"});
  LaurentPoly s = parse_laurent("u^2 + y", base, "u");
  CHECK(s.toPoly(r) == pp(r, "u^2 + y"));
  CHECK_THROWS(lp("u^-1").toPoly(qring({"u"})));
}

TEST_CASE("string form round trips") {
  for (const char* s : {"u^-2 + 5 + u^3", "-u^-1", "3/2*u + 1"}) {
    LaurentPoly f = lp(s);
    CHECK(parse_laurent(f.str(), f.base(), "u") == f);
  }
}

TEST_CASE("dual laurent values") {
  auto base = qring({"v"});
  DualLaurent d = parse_dual_laurent("v - (1+u)*u^-1*eps", base, "u");
  CHECK(d.body == parse_laurent("v", base, "u"));
  CHECK(d.eps.poleOrder() == 1);
  CHECK(d.eps == parse_laurent("-u^-1 - 1", base, "u"));

  DualLaurent sq = d * d;  // eps^2 = 0
  CHECK(sq.body == parse_laurent("v^2", base, "u"));
  CHECK(sq.eps == parse_laurent("-2*v*u^-1 - 2*v", base, "u"));

  CHECK(parse_laurent("u^-1", base, "u").pow(3) == parse_laurent("u^-3", base, "u"));
}

TEST_CASE("eps is rejected without permission") {
  auto base = qring({"v"});
  CHECK_THROWS_AS(parse_laurent("v + eps", base, "u"), ParseError);
}

}
