#include "kflat/dsupp.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace kflat {

namespace {

template <class E>
struct EntryOps;

template <>
struct EntryOps<Poly> {
  static Poly zero(const Poly& s) { return Poly::zero(s.ring()); }
  static Poly one(const Poly& s) { return Poly::constant(s.ring(), 1); }
};

template <>
struct EntryOps<LaurentPoly> {
  static LaurentPoly zero(const LaurentPoly& s) {
    return LaurentPoly::zero(s.base(), s.lvar());
  }
  static LaurentPoly one(const LaurentPoly& s) {
    return LaurentPoly::constant(s.base(), s.lvar(), 1);
  }
};

template <>
struct EntryOps<DualPoly> {
  static DualPoly zero(const DualPoly& s) {
    Poly z = EntryOps<Poly>::zero(s.body);
    return DualPoly(z, z);
  }
  static DualPoly one(const DualPoly& s) {
    return DualPoly(EntryOps<Poly>::one(s.body), EntryOps<Poly>::zero(s.body));
  }
};

template <>
struct EntryOps<DualLaurent> {
  static DualLaurent zero(const DualLaurent& s) {
    LaurentPoly z = EntryOps<LaurentPoly>::zero(s.body);
    return DualLaurent(z, z);
  }
  static DualLaurent one(const DualLaurent& s) {
    return DualLaurent(EntryOps<LaurentPoly>::one(s.body),
                       EntryOps<LaurentPoly>::zero(s.body));
  }
};

}  // namespace

template <class E>
std::vector<E> charpoly_coeffs(const SqMatrix<E>& M) {
  if (M.n <= 0) throw std::invalid_argument("charpoly_coeffs: empty matrix");
  const E zero = EntryOps<E>::zero(M.a.front());
  const E one = EntryOps<E>::one(M.a.front());

  // V holds c_0..c_r for the leading principal r x r block.
  std::vector<E> V;
  V.push_back(one);
  V.push_back(-M.at(0, 0));

  for (int r = 2; r <= M.n; ++r) {
    const int q = r - 1;
    // First column of the (r+1) x r Toeplitz factor:
    // 1, -a_qq, -(R C), -(R M C), ..., -(R M^(r-2) C)
    // with R the row and C the column bordering the q x q block.
    std::vector<E> t;
    t.reserve(r + 1);
    t.push_back(one);
    t.push_back(-M.at(q, q));
    std::vector<E> w(q, zero);
    for (int i = 0; i < q; ++i) w[i] = M.at(i, q);
    for (int k = 2; k <= r; ++k) {
      E dot = zero;
      for (int i = 0; i < q; ++i) dot = dot + M.at(q, i) * w[i];
      t.push_back(-dot);
      if (k < r) {
        std::vector<E> w2(q, zero);
        for (int i = 0; i < q; ++i) {
          E acc = zero;
          for (int j = 0; j < q; ++j) acc = acc + M.at(i, j) * w[j];
          w2[i] = acc;
        }
        w = std::move(w2);
      }
    }
    std::vector<E> Vn(r + 1, zero);
    for (int i = 0; i <= r; ++i) {
      E acc = zero;
      const int jmax = std::min(i, r - 1);
      for (int j = 0; j <= jmax; ++j) acc = acc + t[i - j] * V[j];
      Vn[i] = acc;
    }
    V = std::move(Vn);
  }
  return V;
}

template std::vector<Poly> charpoly_coeffs<Poly>(const SqMatrix<Poly>&);
template std::vector<LaurentPoly> charpoly_coeffs<LaurentPoly>(
    const SqMatrix<LaurentPoly>&);
template std::vector<DualPoly> charpoly_coeffs<DualPoly>(const SqMatrix<DualPoly>&);
template std::vector<DualLaurent> charpoly_coeffs<DualLaurent>(
    const SqMatrix<DualLaurent>&);

SqMatrix<Poly> companion_matrix(const Poly& g, int var) {
  if (g.isZero()) throw std::invalid_argument("companion_matrix: zero polynomial");
  const RingPtr& R = g.ring();
  if (var < 0 || var >= static_cast<int>(R->vars.size()))
    throw std::invalid_argument("companion_matrix: bad variable index");
  const long n = g.degreeIn(var);
  if (n < 1) throw std::invalid_argument("companion_matrix: degree < 1");

  // Coefficients of var^k, each a polynomial in the other variables.
  std::vector<Poly> coef(static_cast<size_t>(n) + 1, Poly::zero(R));
  for (const Term& t : g.terms()) {
    Exps e = t.e;
    const int k = e[var];
    e[var] = 0;
    coef[k] += Poly::monomial(R, e, t.c);
  }
  Poly lead = coef[n];
  if (!lead.isConstant() || lead.constantValue() != 1)
    throw std::invalid_argument("companion_matrix: not monic in the variable");

  SqMatrix<Poly> M(static_cast<int>(n), Poly::zero(R));
  for (int j = 0; j + 1 < n; ++j) M.at(j + 1, j) = Poly::constant(R, 1);
  for (int i = 0; i < n; ++i) M.at(i, static_cast<int>(n) - 1) = -coef[i];
  return M;
}

Poly char_poly(const SqMatrix<Poly>& M, int var) {
  if (M.n <= 0) throw std::invalid_argument("char_poly: empty matrix");
  const RingPtr& R = M.a.front().ring();
  for (const Poly& e : M.a)
    if (e.degreeIn(var) > 0)
      throw std::invalid_argument("char_poly: entries involve the charpoly variable");
  std::vector<Poly> c = charpoly_coeffs(M);
  Poly v = Poly::variable(R, var);
  Poly out = Poly::zero(R);
  for (int k = 0; k <= M.n; ++k)
    out += c[k] * v.pow(static_cast<unsigned long>(M.n - k));
  return out;
}

LaurentPoly char_poly_laurent(const SqMatrix<LaurentPoly>& M, const std::string& var) {
  if (M.n <= 0) throw std::invalid_argument("char_poly_laurent: empty matrix");
  const RingPtr& base = M.a.front().base();
  const std::string& lv = M.a.front().lvar();
  int maxPole = 0;
  for (const LaurentPoly& e : M.a) maxPole = std::max(maxPole, e.poleOrder());
  std::vector<LaurentPoly> c = charpoly_coeffs(M);
  Poly v = Poly::variable(base, var);
  LaurentPoly out = LaurentPoly::zero(base, lv);
  for (int k = 0; k <= M.n; ++k)
    out = out + c[k].mulPoly(v.pow(static_cast<unsigned long>(M.n - k)));
  assert(out.poleOrder() <= M.n * maxPole);
  return out;
}

DualLaurent char_poly_dual(const SqMatrix<DualLaurent>& M, const std::string& var) {
  if (M.n <= 0) throw std::invalid_argument("char_poly_dual: empty matrix");
  const RingPtr& base = M.a.front().body.base();
  const std::string& lv = M.a.front().body.lvar();
  int maxPole = 0;
  for (const DualLaurent& e : M.a)
    maxPole = std::max({maxPole, e.body.poleOrder(), e.eps.poleOrder()});
  std::vector<DualLaurent> c = charpoly_coeffs(M);
  Poly v = Poly::variable(base, var);
  LaurentPoly body = LaurentPoly::zero(base, lv);
  LaurentPoly eps = LaurentPoly::zero(base, lv);
  for (int k = 0; k <= M.n; ++k) {
    Poly vp = v.pow(static_cast<unsigned long>(M.n - k));
    body = body + c[k].body.mulPoly(vp);
    eps = eps + c[k].eps.mulPoly(vp);
  }
  assert(body.poleOrder() <= M.n * maxPole);
  assert(eps.poleOrder() <= M.n * maxPole);
  return DualLaurent(body, eps);
}

Poly dsupp_torsion(const std::vector<Poly>& modules) {
  if (modules.empty())
    throw std::invalid_argument("dsupp_torsion: no modules given");
  Poly out = Poly::constant(modules.front().ring(), 1);
  for (const Poly& g : modules) {
    if (g.isZero()) throw std::invalid_argument("dsupp_torsion: zero annihilator");
    out *= g.monic();
  }
  return out;
}

DsuppResult dsupp_dual(const SqMatrix<DualLaurent>& M, const std::string& var) {
  DsuppResult res;
  res.equation = char_poly_dual(M, var);
  const LaurentPoly& e = res.equation.eps;
  const LaurentPoly& b = res.equation.body;
  res.isCartier = (e.poleOrder() == 0) && (b.poleOrder() == 0);
  if (!res.isCartier) {
    const LaurentPoly& bad = e.poleOrder() > 0 ? e : b;
    const int k = bad.ord();
    res.polarWitness = "(" + bad.coeff(k).str() + ")*" + bad.lvar() + "^" +
                       std::to_string(k) + (e.poleOrder() > 0 ? " in eps part" : "");
  }
  return res;
}

bool is_relative_cartier(const DualLaurent& eq, const Poly& f_k, int yvar, int r) {
  if (r < 0) throw std::invalid_argument("is_relative_cartier: negative pole bound");
  const RingPtr& R = f_k.ring();
  if (yvar < 0 || yvar >= static_cast<int>(R->vars.size()))
    throw std::invalid_argument("is_relative_cartier: bad variable index");
  if (eq.body.lvar() != R->vars[yvar])
    throw std::invalid_argument("is_relative_cartier: Laurent variable mismatch");
  if (eq.body.poleOrder() > 0)
    throw std::invalid_argument("is_relative_cartier: polar body");
  if (eq.body.toPoly(R) != f_k)
    throw std::invalid_argument("is_relative_cartier: body differs from the fiber equation");
  if (eq.eps.poleOrder() > r)
    throw std::invalid_argument("is_relative_cartier: pole order exceeds the stated bound");
  Poly g = eq.eps.shifted(r).toPoly(R);
  Poly yr = Poly::variable(R, yvar).pow(static_cast<unsigned long>(r));
  Ideal J(R, {f_k, yr});
  return J.contains(g);
}

}  // namespace kflat
