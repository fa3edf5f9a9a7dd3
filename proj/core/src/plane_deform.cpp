#include "kflat/plane_deform.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace kflat {

namespace {

RingPtr scalar_ring(const PlaneCurve& C) {
  return make_ring(C.ring->field, {});
}

const std::string& xname(const PlaneCurve& C) { return C.ring->vars[C.xvar]; }
const std::string& yname(const PlaneCurve& C) { return C.ring->vars[C.yvar]; }

// Coefficient of y^i in f, as a Laurent polynomial in x over the scalars.
LaurentPoly x_coeff_of_y_power(const PlaneCurve& C, int i) {
  RingPtr SR = scalar_ring(C);
  LaurentPoly out = LaurentPoly::zero(SR, xname(C));
  for (const Term& t : C.f.terms()) {
    if (t.e[C.yvar] != i) continue;
    out = out + LaurentPoly::term(SR, xname(C), t.e[C.xvar],
                                  Poly::constant(SR, t.c));
  }
  return out;
}

// Rewrites rows (y-power -> x-Laurent) modulo f = y^n + sum_{i<n} a_i(x) y^i,
// eliminating every power >= n from the top down.
void reduce_rows(const PlaneCurve& C, std::map<int, LaurentPoly>& rows) {
  std::vector<LaurentPoly> a;
  a.reserve(C.n);
  for (int i = 0; i < C.n; ++i) a.push_back(x_coeff_of_y_power(C, i));
  RingPtr SR = scalar_ring(C);
  while (!rows.empty()) {
    auto top = std::prev(rows.end());
    const int j = top->first;
    if (j < C.n) break;
    LaurentPoly q = top->second;
    rows.erase(top);
    if (q.isZero()) continue;
    for (int i = 0; i < C.n; ++i) {
      if (a[i].isZero()) continue;
      const int dst = i + j - C.n;
      auto it = rows.find(dst);
      LaurentPoly val = (it == rows.end()) ? LaurentPoly::zero(SR, xname(C))
                                           : it->second;
      val = val - q * a[i];
      if (val.isZero()) {
        if (it != rows.end()) rows.erase(it);
      } else {
        rows[dst] = val;
      }
    }
  }
}

SectionRep rows_to_section(const PlaneCurve& C, std::map<int, LaurentPoly>& rows) {
  SectionRep s = section_zero(C);
  for (auto& [j, v] : rows) {
    if (j < 0 || j >= C.n)
      throw std::logic_error("section row outside the reduced range");
    s.c[j] = v;
  }
  return s;
}

}  // namespace

PlaneCurve make_plane_curve(const Poly& f, int xvar, int yvar) {
  if (f.isZero()) throw std::invalid_argument("make_plane_curve: zero polynomial");
  const RingPtr& R = f.ring();
  const int nv = static_cast<int>(R->vars.size());
  if (xvar < 0 || xvar >= nv || yvar < 0 || yvar >= nv || xvar == yvar)
    throw std::invalid_argument("make_plane_curve: bad variable indices");
  for (const Term& t : f.terms())
    for (int v = 0; v < nv; ++v)
      if (v != xvar && v != yvar && t.e[v] != 0)
        throw std::invalid_argument("make_plane_curve: equation involves extra variables");
  const long n = f.degreeIn(yvar);
  if (n < 1)
    throw std::invalid_argument("make_plane_curve: equation must involve the monic variable");

  mpq_class lead = 0;
  bool found = false;
  for (const Term& t : f.terms()) {
    if (t.e[yvar] != n) continue;
    if (t.e[xvar] != 0 || found)
      throw std::invalid_argument("make_plane_curve: top coefficient is not a scalar");
    lead = t.c;
    found = true;
  }
  PlaneCurve C;
  C.ring = R;
  C.xvar = xvar;
  C.yvar = yvar;
  C.f = f.scaled(R->field.inv(lead));
  C.n = static_cast<int>(n);
  return C;
}

SectionRep section_zero(const PlaneCurve& C) {
  SectionRep s;
  s.c.assign(C.n, LaurentPoly::zero(scalar_ring(C), xname(C)));
  return s;
}

SectionRep section_reduce(const PlaneCurve& C, const LaurentPoly& raw) {
  if (raw.lvar() != xname(C))
    throw std::invalid_argument("section_reduce: Laurent variable mismatch");
  const RingPtr& B = raw.base();
  if (B->vars.size() != 1 || B->vars[0] != yname(C))
    throw std::invalid_argument("section_reduce: base ring must be k[y]");
  RingPtr SR = scalar_ring(C);
  std::map<int, LaurentPoly> rows;
  for (const auto& [k, p] : raw.coeffs()) {
    for (const Term& t : p.terms()) {
      const int j = t.e[0];
      auto it = rows.find(j);
      LaurentPoly add =
          LaurentPoly::term(SR, xname(C), k, Poly::constant(SR, t.c));
      if (it == rows.end())
        rows[j] = add;
      else
        it->second = it->second + add;
    }
  }
  reduce_rows(C, rows);
  return rows_to_section(C, rows);
}

LaurentPoly section_flatten(const PlaneCurve& C, const SectionRep& s) {
  RingPtr B = make_ring(C.ring->field, {yname(C)});
  LaurentPoly out = LaurentPoly::zero(B, xname(C));
  for (int i = 0; i < C.n; ++i) {
    for (const auto& [k, sc] : s.c[i].coeffs()) {
      Poly coef = Poly::monomial(B, {i}, sc.constantValue());
      out = out + LaurentPoly::term(B, xname(C), k, coef);
    }
  }
  return out;
}

SectionRep section_add(const PlaneCurve& C, const SectionRep& a, const SectionRep& b) {
  SectionRep s = section_zero(C);
  for (int i = 0; i < C.n; ++i) s.c[i] = a.c[i] + b.c[i];
  return s;
}

SectionRep section_mul(const PlaneCurve& C, const SectionRep& s, const Poly& p) {
  if (!same_ring(p.ring(), C.ring))
    throw std::invalid_argument("section_mul: multiplier in a different ring");
  RingPtr SR = scalar_ring(C);
  // y-rows of the multiplier
  std::map<int, LaurentPoly> prow;
  for (const Term& t : p.terms()) {
    for (int v = 0; v < static_cast<int>(C.ring->vars.size()); ++v)
      if (v != C.xvar && v != C.yvar && t.e[v] != 0)
        throw std::invalid_argument("section_mul: multiplier involves extra variables");
    const int j = t.e[C.yvar];
    LaurentPoly add =
        LaurentPoly::term(SR, xname(C), t.e[C.xvar], Poly::constant(SR, t.c));
    auto it = prow.find(j);
    if (it == prow.end())
      prow[j] = add;
    else
      it->second = it->second + add;
  }

  std::map<int, LaurentPoly> rows;
  for (int i = 0; i < C.n; ++i) {
    if (s.c[i].isZero()) continue;
    for (const auto& [j, pj] : prow) {
      LaurentPoly prod = s.c[i] * pj;
      if (prod.isZero()) continue;
      auto it = rows.find(i + j);
      if (it == rows.end())
        rows[i + j] = prod;
      else
        it->second = it->second + prod;
    }
  }
  for (auto it = rows.begin(); it != rows.end();)
    it = it->second.isZero() ? rows.erase(it) : std::next(it);
  reduce_rows(C, rows);
  return rows_to_section(C, rows);
}

bool section_is_zero(const SectionRep& s) {
  for (const LaurentPoly& e : s.c)
    if (!e.isZero()) return false;
  return true;
}

bool section_is_regular(const SectionRep& s) {
  for (const LaurentPoly& e : s.c)
    if (e.poleOrder() > 0) return false;
  return true;
}

bool section_equal(const SectionRep& a, const SectionRep& b) {
  if (a.c.size() != b.c.size()) return false;
  for (size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

std::string section_str(const PlaneCurve& C, const SectionRep& s) {
  std::string out;
  for (int i = 0; i < C.n; ++i) {
    if (s.c[i].isZero()) continue;
    std::string piece = "(" + s.c[i].str() + ")";
    if (i == 1) piece += "*" + yname(C);
    if (i > 1) piece += "*" + yname(C) + "^" + std::to_string(i);
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

PlaneFlags plane_classify(const PlaneDeformation& d) {
  PlaneFlags out;
  const PlaneCurve& C = d.curve;
  out.psiRegular = section_is_regular(d.psi);
  if (!out.psiRegular) {
    out.flat = false;
    out.cflat = false;
    out.globalizes = Tri::No;
    out.diagnostic = "psi has a pole, so the pair is not a deformation of the curve";
    return out;
  }

  out.flat = section_is_regular(d.phi);
  const bool rx = section_is_regular(section_mul(C, d.phi, C.f.derivative(C.xvar)));
  const bool ry = section_is_regular(section_mul(C, d.phi, C.f.derivative(C.yvar)));
  out.cflat = rx && ry;

  // Globalization needs the normalization; only the monomial parametrization
  // is implemented, so every other curve reports Unknown.
  auto E = monomial_curve_shape(C);
  if (E) {
    std::vector<long> exps = section_t_exponents(*E, C, d.phi);
    bool ok = std::all_of(exps.begin(), exps.end(), [](long m) { return m >= 0; });
    out.globalizes = ok ? Tri::Yes : Tri::No;
  } else {
    out.globalizes = Tri::Unknown;
  }

  std::string diag = out.flat ? "phi regular: flat" : "phi has a pole: not flat";
  if (out.cflat) {
    if (!out.flat) diag += "; f_x*phi and f_y*phi regular: C-flat";
  } else {
    if (!rx && !ry)
      diag += "; f_x*phi and f_y*phi have poles";
    else
      diag += rx ? "; f_y*phi has a pole" : "; f_x*phi has a pole";
  }
  out.diagnostic = diag;
  return out;
}

std::optional<Semigroup> monomial_curve_shape(const PlaneCurve& C) {
  if (C.f.terms().size() != 2) return std::nullopt;
  long a = -1;
  bool sawTop = false, sawX = false;
  for (const Term& t : C.f.terms()) {
    if (t.e[C.yvar] == C.n && t.e[C.xvar] == 0 && t.c == 1) {
      sawTop = true;
    } else if (t.e[C.yvar] == 0 && t.e[C.xvar] > 0 &&
               t.c == C.ring->field.norm(mpq_class(-1))) {
      a = t.e[C.xvar];
      sawX = true;
    }
  }
  if (!sawTop || !sawX) return std::nullopt;
  if (std::gcd(a, static_cast<long>(C.n)) != 1) return std::nullopt;
  return make_semigroup(a, C.n);
}

MonomialFlags monomial_classify(const Semigroup& E, const std::vector<long>& phiExponents) {
  MonomialFlags out;
  out.flat = true;
  out.globalizes = true;
  out.cflat = true;
  const long ac = E.a * E.c;
  for (long m : phiExponents) {
    if (!E.contains(m)) out.flat = false;
    if (m < 0) out.globalizes = false;
    if (!E.contains(ac - E.c + m) || !E.contains(ac - E.a + m)) out.cflat = false;
  }
  return out;
}

std::vector<long> section_t_exponents(const Semigroup& E, const PlaneCurve& C,
                                      const SectionRep& s) {
  if (static_cast<long>(C.n) != E.c)
    throw std::invalid_argument("section_t_exponents: semigroup does not match the curve");
  std::vector<long> out;
  for (int i = 0; i < C.n; ++i)
    for (const auto& [k, sc] : s.c[i].coeffs()) {
      (void)sc;
      out.push_back(E.a * i + E.c * static_cast<long>(k));
    }
  std::sort(out.begin(), out.end());
  return out;
}

SectionRep section_from_t_monomial(const PlaneCurve& C, const Semigroup& E, long m) {
  if (static_cast<long>(C.n) != E.c)
    throw std::invalid_argument("section_from_t_monomial: semigroup does not match the curve");
  for (int i = 0; i < C.n; ++i) {
    long num = m - E.a * i;
    if (((num % E.c) + E.c) % E.c != 0) continue;
    long e = num / E.c;  // exact
    SectionRep s = section_zero(C);
    RingPtr SR = scalar_ring(C);
    s.c[i] = LaurentPoly::term(SR, xname(C), static_cast<int>(e),
                               Poly::constant(SR, 1));
    return s;
  }
  throw std::logic_error("section_from_t_monomial: no representative found");
}

CartierTestResult cartier_principal_test(const Poly& f_k, const Poly& g_k, int yvar, int r) {
  CartierTestResult res;
  if (r < 0) throw std::invalid_argument("cartier_principal_test: negative exponent");
  const RingPtr& R = f_k.ring();
  if (!same_ring(g_k.ring(), R))
    throw std::invalid_argument("cartier_principal_test: mixed rings");
  if (yvar < 0 || yvar >= static_cast<int>(R->vars.size()))
    throw std::invalid_argument("cartier_principal_test: bad variable index");
  Poly y = Poly::variable(R, yvar);

  Ideal If(R, {f_k});
  Ideal Ig(R, {g_k});
  const bool fOk = ideal_equal(ideal_quotient(If, y), If);
  const bool gOk = ideal_equal(ideal_quotient(Ig, y), Ig);
  res.preconditionOk = fOk && gOk;

  Ideal J(R, {f_k, y.pow(static_cast<unsigned long>(r))});
  res.member = J.contains(g_k);

  const std::string& yn = R->vars[yvar];
  if (!fOk)
    res.diagnostic = yn + " is a zerodivisor modulo the fiber equation";
  else if (!gOk)
    res.diagnostic = yn + " is a zerodivisor modulo the section numerator";
  else
    res.diagnostic = res.member
                         ? "membership holds: the divisor is relative Cartier"
                         : "membership fails: the divisor is not relative Cartier";
  return res;
}

std::vector<DualPoly> example_smooth_ideal(const RingPtr& ring, int uvar, int vvar,
                                           int r, const Poly& q) {
  if (r < 0) throw std::invalid_argument("example_smooth_ideal: negative exponent");
  const int nv = static_cast<int>(ring->vars.size());
  if (uvar < 0 || uvar >= nv || vvar < 0 || vvar >= nv || uvar == vvar)
    throw std::invalid_argument("example_smooth_ideal: bad variable indices");
  if (!same_ring(q.ring(), ring))
    throw std::invalid_argument("example_smooth_ideal: q in a different ring");
  if (q.degreeIn(vvar) > 0)
    throw std::invalid_argument("example_smooth_ideal: q must not involve v");
  Poly u = Poly::variable(ring, uvar);
  Poly v = Poly::variable(ring, vvar);
  Poly z = Poly::zero(ring);
  return {DualPoly(v * v, z),
          DualPoly(v * u.pow(static_cast<unsigned long>(r)), q),
          DualPoly(z, v)};
}

std::vector<DualPoly> example_jfg_ideal(const Poly& f, const Poly& g) {
  const RingPtr& R = f.ring();
  if (!same_ring(g.ring(), R))
    throw std::invalid_argument("example_jfg_ideal: mixed rings");
  Poly z = Poly::zero(R);
  return {DualPoly(f * f, z), DualPoly(f * g, Poly::constant(R, 1)),
          DualPoly(z, f)};
}

Ideal central_fiber_ideal(const RingPtr& ring, const std::vector<DualPoly>& gens) {
  std::vector<Poly> bodies;
  for (const DualPoly& g : gens) {
    if (!same_ring(g.body.ring(), ring))
      throw std::invalid_argument("central_fiber_ideal: mixed rings");
    if (!g.body.isZero()) bodies.push_back(g.body);
  }
  return Ideal(ring, bodies);
}

}  // namespace kflat
