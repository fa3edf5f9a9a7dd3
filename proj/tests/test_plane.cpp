#include <algorithm>

#include "doctest.h"
#include "helpers.hpp"
#include "kflat/parse.hpp"
#include "kflat/plane_deform.hpp"

using namespace kflat;
using kt::ideal;
using kt::pp;
using kt::qring;

namespace {

LaurentPoly L(const RingPtr& coef, const std::string& lv, const std::string& src) {
  return parse_laurent(src, coef, lv);
}

}  // namespace

TEST_SUITE("plane") {

TEST_CASE("monic normalization and rejection") {
  auto r = qring({"x", "y"});
  PlaneCurve C = make_plane_curve(pp(r, "2*y^2 - 2*x^3"), 0, 1);
  CHECK(C.f == pp(r, "y^2 - x^3"));
  CHECK(C.n == 2);
  CHECK(C.xvar == 0);
  CHECK(C.yvar == 1);

  CHECK_THROWS(make_plane_curve(pp(r, "x*y^2 + y"), 0, 1));
  CHECK_THROWS(make_plane_curve(pp(r, "x^3"), 0, 1));

  // roles may be swapped
  PlaneCurve S = make_plane_curve(pp(r, "x^2 - y^3"), 1, 0);
  CHECK(S.n == 2);
}

TEST_CASE("section arithmetic mod the curve") {
  auto r = qring({"u", "v"});
  auto rv = qring({"v"});
  PlaneCurve C = make_plane_curve(pp(r, "v^2 - u^3"), 0, 1);

  CHECK(section_is_zero(section_zero(C)));

  // v^2 and u^3 are the same section
  SectionRep a = section_reduce(C, L(rv, "u", "v^2"));
  SectionRep b = section_reduce(C, L(rv, "u", "u^3"));
  CHECK(section_equal(a, b));
  CHECK(section_is_regular(a));

  // v * v = u^3 via multiplication
  SectionRep sv = section_reduce(C, L(rv, "u", "v"));
  CHECK(section_equal(section_mul(C, sv, pp(r, "v")), b));

  // the curve equation kills every section
  SectionRep one = section_reduce(C, L(rv, "u", "1"));
  CHECK(section_is_zero(section_mul(C, one, C.f)));

  SectionRep sum = section_add(C, sv, one);
  CHECK(section_flatten(C, sum) == section_flatten(C, sv) + section_flatten(C, one));

  // flatten inverts reduce on reduced input
  LaurentPoly raw = L(rv, "u", "v*u^-2");
  CHECK(section_flatten(C, section_reduce(C, raw)) == raw);
  CHECK(!section_is_regular(section_reduce(C, raw)));
  CHECK(section_str(C, section_reduce(C, raw)).find("u^-2") != std::string::npos);
}

TEST_CASE("classification of cusp deformations") {
  auto r = qring({"x", "y"});
  auto ry = qring({"y"});
  PlaneCurve C = make_plane_curve(pp(r, "y^2 - x^3"), 0, 1);

  PlaneDeformation d;
  d.curve = C;
  d.psi = section_zero(C);

  // phi = y/x^2: a pole of exact Frobenius depth
  d.phi = section_reduce(C, L(ry, "x", "y*x^-2"));
  PlaneFlags polar = plane_classify(d);
  CHECK(polar.psiRegular);
  CHECK(!polar.flat);
  CHECK(polar.cflat);
  CHECK(polar.globalizes == Tri::No);

  // one step deeper fails the multiplier test
  d.phi = section_reduce(C, L(ry, "x", "y*x^-3"));
  PlaneFlags deeper = plane_classify(d);
  CHECK(!deeper.flat);
  CHECK(!deeper.cflat);

  // regular phi
  d.phi = section_reduce(C, L(ry, "x", "y + x^2"));
  PlaneFlags reg = plane_classify(d);
  CHECK(reg.psiRegular);
  CHECK(reg.flat);
  CHECK(reg.cflat);
  CHECK(reg.globalizes == Tri::Yes);

  // a pole in psi poisons everything
  d.psi = section_reduce(C, L(ry, "x", "x^-1"));
  PlaneFlags bad = plane_classify(d);
  CHECK(!bad.psiRegular);
  CHECK(!bad.flat);
  CHECK(!bad.cflat);
  CHECK(bad.globalizes != Tri::Yes);
  CHECK(!bad.diagnostic.empty());
}

TEST_CASE("flags are invariant under regular shifts of phi") {
  auto r = qring({"x", "y"});
  auto ry = qring({"y"});
  PlaneCurve C = make_plane_curve(pp(r, "y^2 - x^3"), 0, 1);
  SectionRep h = section_reduce(C, L(ry, "x", "x^2 + y*x^3"));
  REQUIRE(section_is_regular(h));

  for (const char* phiSrc : {"y*x^-2", "y*x^-3", "x^-1", "y + 1"}) {
    PlaneDeformation d;
    d.curve = C;
    d.psi = section_zero(C);
    d.phi = section_reduce(C, L(ry, "x", phiSrc));
    PlaneFlags before = plane_classify(d);
    d.phi = section_add(C, d.phi, h);
    PlaneFlags after = plane_classify(d);
    CHECK(before.psiRegular == after.psiRegular);
    CHECK(before.flat == after.flat);
    CHECK(before.cflat == after.cflat);
    CHECK(before.globalizes == after.globalizes);
  }
}

TEST_CASE("globalization is left open off the monomial case") {
  auto r = qring({"x", "y"});
  auto ry = qring({"y"});
  PlaneCurve C = make_plane_curve(pp(r, "y^2 - x^3 - x^2"), 0, 1);
  PlaneDeformation d;
  d.curve = C;
  d.psi = section_zero(C);
  d.phi = section_reduce(C, L(ry, "x", "y + x"));
  PlaneFlags flags = plane_classify(d);
  CHECK(flags.flat);
  CHECK(flags.cflat);
  CHECK(flags.globalizes == Tri::Unknown);
}

TEST_CASE("monomial recognition") {
  auto r = qring({"x", "y"});
  auto cusp = monomial_curve_shape(make_plane_curve(pp(r, "y^2 - x^3"), 0, 1));
  REQUIRE(cusp.has_value());
  CHECK(cusp->a == 3);
  CHECK(cusp->c == 2);
  CHECK(cusp->frobenius() == 1);

  auto quart = monomial_curve_shape(make_plane_curve(pp(r, "y^3 - x^4"), 0, 1));
  REQUIRE(quart.has_value());
  CHECK(quart->a == 4);
  CHECK(quart->c == 3);
  CHECK(quart->gapCount() == 3);

  CHECK(!monomial_curve_shape(make_plane_curve(pp(r, "y^2 - x^3 - x^2"), 0, 1)).has_value());
  CHECK(!monomial_curve_shape(make_plane_curve(pp(r, "y^2 - x^4"), 0, 1)).has_value());
}

TEST_CASE("semigroup and section routes agree") {
  auto r = qring({"x", "y"});
  PlaneCurve C = make_plane_curve(pp(r, "y^2 - x^3"), 0, 1);
  Semigroup E = *monomial_curve_shape(C);

  for (long m = -10; m <= 10; ++m) {
    CAPTURE(m);
    SectionRep s = section_from_t_monomial(C, E, m);
    CHECK(section_t_exponents(E, C, s) == std::vector<long>{m});

    PlaneDeformation d;
    d.curve = C;
    d.psi = section_zero(C);
    d.phi = s;
    PlaneFlags viaCurve = plane_classify(d);
    MonomialFlags viaSemigroup = monomial_classify(E, {m});
    CHECK(viaCurve.flat == viaSemigroup.flat);
    CHECK(viaCurve.cflat == viaSemigroup.cflat);
    REQUIRE(viaCurve.globalizes != Tri::Unknown);
    CHECK((viaCurve.globalizes == Tri::Yes) == viaSemigroup.globalizes);
  }

  // multi-term section t^-1 + t^4
  SectionRep s = section_add(C, section_from_t_monomial(C, E, -1),
                             section_from_t_monomial(C, E, 4));
  std::vector<long> te = section_t_exponents(E, C, s);
  std::sort(te.begin(), te.end());
  CHECK(te == std::vector<long>{-1, 4});
  PlaneDeformation d;
  d.curve = C;
  d.psi = section_zero(C);
  d.phi = s;
  PlaneFlags flags = plane_classify(d);
  MonomialFlags mono = monomial_classify(E, {-1, 4});
  CHECK(!mono.flat);
  CHECK(mono.cflat);
  CHECK(!mono.globalizes);
  CHECK(flags.flat == mono.flat);
  CHECK(flags.cflat == mono.cflat);
  CHECK((flags.globalizes == Tri::Yes) == mono.globalizes);
}

TEST_CASE("cartier principality") {
  auto r = qring({"u", "v"});

  CartierTestResult t1 = cartier_principal_test(pp(r, "v"), pp(r, "1 + u"), 0, 1);
  CHECK(t1.preconditionOk);
  CHECK(!t1.member);

  CartierTestResult t2 =
      cartier_principal_test(pp(r, "v^2 - u^3"), pp(r, "v^2 - u^3"), 0, 2);
  CHECK(t2.preconditionOk);
  CHECK(t2.member);

  CartierTestResult t3 = cartier_principal_test(pp(r, "v^2 - u^3"), pp(r, "u^3*v"), 0, 3);
  CHECK(!t3.preconditionOk);
  CHECK(t3.member);
  CHECK(!t3.diagnostic.empty());
}

TEST_CASE("displayed deformation ideals and their torsion") {
  auto r = qring({"u", "v"});

  auto smooth = example_smooth_ideal(r, 0, 1, 2, pp(r, "1 + u"));
  REQUIRE(smooth.size() == 3);
  CHECK(smooth[0].body == pp(r, "v^2"));
  CHECK(smooth[0].eps.isZero());
  CHECK(smooth[1].body == pp(r, "v*u^2"));
  CHECK(smooth[1].eps == pp(r, "1 + u"));
  CHECK(smooth[2].body.isZero());
  CHECK(smooth[2].eps == pp(r, "v"));

  Ideal fib = central_fiber_ideal(r, smooth);
  CHECK(ideal_equal(fib, ideal(r, {"v^2", "v*u^2"})));
  TorsionResult tor = torsion_length(fib);
  CHECK(tor.len.stabilized);
  CHECK(tor.len.length == 2);
  CHECK(ideal_equal(tor.pure, ideal(r, {"v"})));

  Poly f = pp(r, "v^2 - u^3");
  auto cuspidal = example_jfg_ideal(f, pp(r, "v"));
  REQUIRE(cuspidal.size() == 3);
  CHECK(cuspidal[0].body == f * f);
  CHECK(cuspidal[1].body == f * pp(r, "v"));
  CHECK(cuspidal[1].eps == Poly::constant(r, 1));
  CHECK(cuspidal[2].eps == f);
  TorsionResult ctor = torsion_length(central_fiber_ideal(r, cuspidal));
  CHECK(ctor.len.stabilized);
  CHECK(ctor.len.length == 3);
  CHECK(ideal_equal(ctor.pure, Ideal(r, {f})));

  auto tiny = example_jfg_ideal(pp(r, "u"), pp(r, "v"));
  Ideal tfib = central_fiber_ideal(r, tiny);
  CHECK(ideal_equal(tfib, ideal(r, {"u^2", "u*v"})));
  TorsionResult ttor = torsion_length(tfib);
  CHECK(ttor.len.length == 1);
  CHECK(ideal_equal(ttor.pure, ideal(r, {"u"})));
}

}
