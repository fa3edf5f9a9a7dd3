#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace kflat;
using kt::ideal;
using kt::pp;
using kt::qring;

namespace {

// S-polynomial of two monic basis elements.
Poly spoly(const Poly& f, const Poly& g) {
  Exps l = exps_lcm(f.leadTerm().e, g.leadTerm().e);
  return f.mulMonomial(exps_div(l, f.leadTerm().e), 1) -
         g.mulMonomial(exps_div(l, g.leadTerm().e), 1);
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("already a basis") {
  auto r = qring({"x", "y"}, MonomialOrder::lex());
  auto basis = buchberger(r, {pp(r, "x^2"), pp(r, "x*y")}, r->order);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == pp(r, "x^2"));
  CHECK(basis[1] == pp(r, "x*y"));
}

TEST_CASE("lex basis of a twisted pair") {
  auto r = qring({"x", "y"}, MonomialOrder::lex());
  auto basis = buchberger(r, {pp(r, "x - y^2"), pp(r, "y - x^2")}, r->order);
  REQUIRE(basis.size() == 2);
  CHECK(basis[0] == pp(r, "x - y^2"));
  CHECK(basis[1] == pp(r, "y^4 - y"));
}

TEST_CASE("monomial-plus-curve generators are stable") {
  auto r = qring({"u", "v"});
  auto basis = buchberger(r, {pp(r, "v^2"), pp(r, "v*u^3")}, r->order);
  REQUIRE(basis.size() == 2);
  CHECK(ideal_equal(Ideal(r, basis), ideal(r, {"v^2", "v*u^3"})));
}

TEST_CASE("basis is deterministic and cached") {
  auto r = qring({"x", "y", "z"});
  std::vector<Poly> gens = {pp(r, "x^2 + y*z"), pp(r, "x*z - y"), pp(r, "y^3 - z^2")};
  auto b1 = buchberger(r, gens, r->order);
  auto b2 = buchberger(r, gens, r->order);
  CHECK(b1 == b2);
  Ideal I(r, gens);
  CHECK(I.groebner() == b1);
  CHECK(I.groebner() == I.groebner());
  CHECK(I.groebner(MonomialOrder::lex()) ==
        buchberger(r, gens, MonomialOrder::lex()));
}

TEST_CASE("every S-pair and every generator reduces to zero") {
  auto r = qring({"x", "y"});
  std::vector<Poly> gens = {pp(r, "x^2 + y^2"), pp(r, "x*y - 1")};
  auto basis = buchberger(r, gens, r->order);
  for (const auto& g : gens) CHECK(normal_form(g, basis, r->order).isZero());
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j)
      CHECK(normal_form(spoly(basis[i], basis[j]), basis, r->order).isZero());
}

TEST_CASE("membership") {
  auto r = qring({"x", "y"});
  Ideal I = ideal(r, {"x", "y"});
  CHECK(ideal_member(pp(r, "y"), I));
  CHECK(ideal_member(Poly::zero(r), I));
  CHECK(ideal_member(pp(r, "x^2 + 3*y"), I));
  CHECK(!ideal_member(pp(r, "x + 1"), I));
  // restricted derivative ideal of the quartic pair: x^2 y^2 stays outside
  Ideal J = ideal(r, {"x^4 + y^4 + x^2*y^2", "4*x^3 + 2*x*y^2", "4*y^3 + 2*x^2*y"});
  CHECK(!ideal_member(pp(r, "x^2*y^2"), J));
}

TEST_CASE("membership is closed under multiplication") {
  auto r = qring({"x", "y"});
  Ideal I = ideal(r, {"x^2 - y", "x*y + y^2"});
  std::mt19937_64 gen(7);
  std::vector<Poly> pool = {pp(r, "x"), pp(r, "y - 3"), pp(r, "x*y + 1"),
                            pp(r, "x^2 + y^2"), pp(r, "5")};
  for (int k = 0; k < 20; ++k) {
    const Poly& p = I.gens()[gen() % I.gens().size()];
    const Poly& q = pool[gen() % pool.size()];
    CHECK(ideal_member(p * q, I));
  }
}

TEST_CASE("intersection") {
  auto r2 = qring({"x", "y"});
  CHECK(ideal_equal(ideal_intersect(ideal(r2, {"x"}), ideal(r2, {"y"})),
                    ideal(r2, {"x*y"})));
  Ideal m = ideal(r2, {"x", "y"});
  CHECK(ideal_equal(ideal_intersect(m, m), m));

  auto r3 = qring({"x", "y", "z"});
  Ideal xaxis = ideal(r3, {"y", "z"});
  Ideal yaxis = ideal(r3, {"x", "z"});
  CHECK(ideal_equal(ideal_intersect(xaxis, yaxis), ideal(r3, {"z", "x*y"})));
  CHECK(ideal_equal(ideal_intersect(xaxis, yaxis), ideal_intersect(yaxis, xaxis)));
}

TEST_CASE("quotient and saturation") {
  auto r = qring({"u", "v"});
  Ideal I = ideal(r, {"v^2", "v*u^3"});
  CHECK(ideal_equal(saturate(I, pp(r, "u")), ideal(r, {"v"})));
  CHECK(ideal_equal(ideal_quotient(I, pp(r, "1")), I));
  auto r2 = qring({"x", "y"});
  CHECK(ideal_equal(saturate(ideal(r2, {"x^2*y"}), pp(r2, "x")),
                    ideal(r2, {"y"})));
  CHECK(ideal_equal(ideal_quotient(ideal(r2, {"x^2", "x*y"}), pp(r2, "x")),
                    ideal(r2, {"x", "y"})));
}

TEST_CASE("exact division") {
  auto r = qring({"x", "y"});
  auto q = exact_divide(pp(r, "x^2*y^2 - x*y"), pp(r, "x*y"));
  REQUIRE(q.has_value());
  CHECK(*q == pp(r, "x*y - 1"));
  CHECK(!exact_divide(pp(r, "x^2 + y"), pp(r, "x")).has_value());
}

TEST_CASE("elementwise power, characteristic zero") {
  auto r = qring({"x", "y"});
  Ideal I = ideal(r, {"x", "y"});
  Ideal cube = ideal_product(ideal_product(I, I), I);
  CHECK(ideal_equal(elementwise_power(I, 3), cube));
  for (unsigned long m = 1; m <= 4; ++m) {
    Ideal J = ideal(r, {"x + y^2", "x*y - 1"});
    Ideal power = J;
    for (unsigned long k = 1; k < m; ++k) power = ideal_product(power, J);
    CHECK(ideal_equal(elementwise_power(J, m), power));
  }
  // principal ideals: (f)^[m] = (f^m)
  Ideal P = ideal(r, {"x + y^2"});
  CHECK(ideal_equal(elementwise_power(P, 3), ideal(r, {"(x + y^2)^3"})));
}

TEST_CASE("elementwise power over tiny prime fields") {
  auto r3 = make_ring(FieldSpec::prime(3), {"x", "y"});
  Ideal I(r3, {pp(r3, "x"), pp(r3, "y")});
  CHECK_THROWS(elementwise_power(I, 4));  // |k| <= m needs an explicit policy
  Ideal span = elementwise_power(I, 4, TinyFieldPolicy::MultinomialSpan);
  Ideal expect(r3, {pp(r3, "x^4"), pp(r3, "x^3*y"), pp(r3, "x*y^3"), pp(r3, "y^4")});
  CHECK(ideal_equal(span, expect));
  CHECK(!ideal_member(pp(r3, "x^2*y^2"), span));
  // Constant-coefficient fourth powers reach strictly less: (c1 x + c2 y)^4
  // over F3 always carries x^3*y and x*y^3 together (c = c^3 for c in F3).
  Ideal scan = elementwise_power(I, 4, TinyFieldPolicy::ExhaustiveScan);
  Ideal scanExpect(r3, {pp(r3, "x^4"), pp(r3, "y^4"), pp(r3, "x^3*y + x*y^3")});
  CHECK(ideal_equal(scan, scanExpect));
  CHECK(!ideal_member(pp(r3, "x^3*y"), scan));
  for (const Poly& g : scan.groebner()) CHECK(ideal_member(g, span));
  // m below the characteristic needs no policy
  auto r7 = make_ring(FieldSpec::prime(7), {"x", "y"});
  Ideal J(r7, {pp(r7, "x"), pp(r7, "y")});
  Ideal JJ = ideal_product(J, ideal_product(J, J));
  CHECK(ideal_equal(elementwise_power(J, 3), JJ));
}

TEST_CASE("pure part drops origin components only") {
  auto r = qring({"x", "y"});
  CHECK(ideal_equal(pure_part(ideal(r, {"x^2", "x*y"})), ideal(r, {"x"})));
  CHECK(ideal_equal(pure_part(ideal(r, {"x*y"})), ideal(r, {"x*y"})));
  // explicit saturation variable
  auto ruv = qring({"u", "v"});
  CHECK(ideal_equal(pure_part(ideal(ruv, {"v^2", "v*u^2"}), 0),
                    ideal(ruv, {"v"})));
  // an embedded line is not an origin component
  auto r3 = qring({"x", "y", "z"});
  Ideal I = ideal(r3, {"x^2", "x*y"});
  CHECK(ideal_equal(pure_part(I), I));
}

TEST_CASE("torsion lengths") {
  auto r = qring({"u", "v"});
  for (int rr = 1; rr <= 3; ++rr) {
    Ideal I = ideal(r, {"v^2", "v*u^" + std::to_string(rr)});
    TorsionResult t = torsion_length(I);
    CHECK(t.len.stabilized);
    CHECK(t.len.length == rr);
    CHECK(ideal_equal(t.pure, ideal(r, {"v"})));
  }
  TorsionResult axes = torsion_length(ideal(r, {"u*v"}));
  CHECK(axes.len.stabilized);
  CHECK(axes.len.length == 0);
  TorsionResult fat = torsion_length(ideal(r, {"u^2", "u*v"}));
  CHECK(fat.len.length == 1);
}

TEST_CASE("length of a nested quotient") {
  auto r = qring({"x", "y"});
  Ideal m = ideal(r, {"x", "y"});
  Ideal m3 = ideal(r, {"x^3", "x^2*y", "x*y^2", "y^3"});
  LengthResult len = length_between(m3, m);
  CHECK(len.stabilized);
  CHECK(len.length == 5);
}

TEST_CASE("standard monomial count") {
  auto r = qring({"x", "y"}, MonomialOrder::lex());
  std::vector<Poly> basis = {pp(r, "x^2"), pp(r, "x*y")};
  CHECK(count_standard_monomials(r, basis, 3) == 5);  // 1, x, y, y^2, y^3
}

TEST_CASE("unit and zero ideals") {
  auto r = qring({"x"});
  CHECK(ideal(r, {"x", "x + 1"}).isUnitIdeal());
  CHECK(Ideal(r, {}).isZeroIdeal());
  CHECK(!ideal(r, {"x"}).isUnitIdeal());
}

}
