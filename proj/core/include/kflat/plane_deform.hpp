#pragma once

#include <optional>

#include "kflat/dual.hpp"
#include "kflat/groebner.hpp"
#include "kflat/semigroup.hpp"

namespace kflat {

// Plane curve (f = 0) in k[x,y] with f monic in y of degree n.  Sections of
// the structure sheaf on the punctured curve are written sum_{i<n} y^i g_i(x)
// with Laurent coefficients g_i (poles in x only).
struct PlaneCurve {
  RingPtr ring;  // two-variable ring containing f
  int xvar = 0;  // Laurent direction
  int yvar = 1;  // monic direction
  Poly f;        // scaled so the y^n coefficient is 1
  int n = 0;     // deg_y f
};

// Scales f monic in y; rejects f whose top y-coefficient is not a nonzero
// scalar.
PlaneCurve make_plane_curve(const Poly& f, int xvar, int yvar);

// Section sum_i y^i c[i](x); c.size() == curve.n; each c[i] is Laurent in x
// over the scalar ring.
struct SectionRep {
  std::vector<LaurentPoly> c;
};

SectionRep section_zero(const PlaneCurve& C);
// Reduces an element of k[x,x^-1][y] (given as Laurent in x over k[y]) mod f
// by division in y.
SectionRep section_reduce(const PlaneCurve& C, const LaurentPoly& raw);
LaurentPoly section_flatten(const PlaneCurve& C, const SectionRep& s);
SectionRep section_add(const PlaneCurve& C, const SectionRep& a, const SectionRep& b);
// Multiplies by a polynomial in k[x,y] and reduces.
SectionRep section_mul(const PlaneCurve& C, const SectionRep& s, const Poly& p);
bool section_is_zero(const SectionRep& s);
bool section_is_regular(const SectionRep& s);
bool section_equal(const SectionRep& a, const SectionRep& b);
std::string section_str(const PlaneCurve& C, const SectionRep& s);

// Deformation f(x,y) = psi*eps, z = phi*eps of the curve over the dual
// numbers; psi, phi reduced mod f.
struct PlaneDeformation {
  PlaneCurve curve;
  SectionRep psi;
  SectionRep phi;
};

enum class Tri { Yes, No, Unknown };

// flat: phi regular; globalizes: phi regular on the normalization (decided
// for monomial curves only); cflat: f_x*phi and f_y*phi regular.  All require
// psi regular; when psi has a pole every flag is negative and the diagnostic
// names the offending condition.
struct PlaneFlags {
  bool psiRegular = false;
  bool flat = false;
  Tri globalizes = Tri::Unknown;
  bool cflat = false;
  std::string diagnostic;
};

PlaneFlags plane_classify(const PlaneDeformation& d);

// Recognizes f = y^c - x^a with gcd(a,c) = 1 and returns the exponent
// semigroup of the parametrization t -> (t^c, t^a).
std::optional<Semigroup> monomial_curve_shape(const PlaneCurve& C);

// Semigroup route for the monomial curve: phi = sum of t^m terms.
struct MonomialFlags {
  bool flat = false;
  bool globalizes = false;
  bool cflat = false;
};
MonomialFlags monomial_classify(const Semigroup& E, const std::vector<long>& phiExponents);

// t-exponents a*i + c*e of the monomials y^i x^e appearing in s.
std::vector<long> section_t_exponents(const Semigroup& E, const PlaneCurve& C,
                                      const SectionRep& s);
// t^m written as a section on y^c = x^a (unique i in [0,c), e = (m - a*i)/c).
SectionRep section_from_t_monomial(const PlaneCurve& C, const Semigroup& E, long m);

// Membership g_k in (f_k, y^r); the non-zerodivisor precondition on y is
// checked ((f_k) : y = (f_k), same for g_k) and reported, never assumed.
struct CartierTestResult {
  bool preconditionOk = false;
  bool member = false;
  std::string diagnostic;
};
CartierTestResult cartier_principal_test(const Poly& f_k, const Poly& g_k, int yvar, int r);

// Displayed divisor ideals over the dual numbers.
// (v^2, v u^r + q(u) eps, v eps) for the smooth curve v = 0:
std::vector<DualPoly> example_smooth_ideal(const RingPtr& ring, int uvar, int vvar,
                                           int r, const Poly& q);
// J_{f,g} = (f^2, f g + eps, f eps):
std::vector<DualPoly> example_jfg_ideal(const Poly& f, const Poly& g);
// Ideal of the eps = 0 fiber: bodies of the generators.
Ideal central_fiber_ideal(const RingPtr& ring, const std::vector<DualPoly>& gens);

}  // namespace kflat
