#pragma once

#include <optional>

#include "kflat/dual.hpp"
#include "kflat/groebner.hpp"

namespace kflat {

// Square matrix over a coefficient ring E (Poly, LaurentPoly or a Dual of
// those).  Row-major storage.
template <class E>
struct SqMatrix {
  int n = 0;
  std::vector<E> a;

  SqMatrix() = default;
  SqMatrix(int n_, E fill) : n(n_), a(static_cast<size_t>(n_) * n_, fill) {}
  E& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Companion matrix of a polynomial monic in `var`: ones on the subdiagonal,
// negated coefficients in the last column.
SqMatrix<Poly> companion_matrix(const Poly& g, int var);

// Coefficients c_0..c_n of det(v*Id - M) = sum c_k v^(n-k), c_0 = 1, computed
// by the division-free Berkowitz recursion; valid over any commutative ring.
template <class E>
std::vector<E> charpoly_coeffs(const SqMatrix<E>& M);

// Assembles charpoly_coeffs into a polynomial in the variable `var` of the
// entry ring; entries must not involve that variable.
Poly char_poly(const SqMatrix<Poly>& M, int var);

// Same for Laurent-coefficient matrices: `var` names a variable of the base
// ring; the result is a Laurent polynomial over that base.  The pole order of
// the result is checked against n * (max entry pole order).
LaurentPoly char_poly_laurent(const SqMatrix<LaurentPoly>& M, const std::string& var);
DualLaurent char_poly_dual(const SqMatrix<DualLaurent>& M, const std::string& var);

// Divisorial support equation of a direct sum of cyclic torsion modules
// k[x]/(g_j): the product of the (monic) g_j.
Poly dsupp_torsion(const std::vector<Poly>& modules);

// Outcome of a divisorial-support computation over the dual numbers.
struct DsuppResult {
  DualLaurent equation;
  bool isCartier = false;                  // no pole in the eps part
  std::optional<std::string> polarWitness; // an offending polar term, if any
};

// Char-poly equation of a multiplication matrix over k[eps]; the eps part of
// the result is in normal form (v-degree < n), so the divisor is relative
// Cartier exactly when no Laurent coefficient has a pole.
DsuppResult dsupp_dual(const SqMatrix<DualLaurent>& M, const std::string& var);

// Relative Cartier test for eq = f + eps * y^(-r) * g with f, g polynomial:
// true iff g lies in (f_k, y^r).  `yvar` indexes the polar variable in the
// ring of f_k.  Throws on a malformed polar shape (pole order beyond r, or a
// body differing from f_k).
bool is_relative_cartier(const DualLaurent& eq, const Poly& f_k, int yvar, int r);

}  // namespace kflat
