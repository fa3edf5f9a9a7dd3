#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "kflat/dual.hpp"
#include "kflat/groebner.hpp"

namespace kflat {

// First-order deformation of the n coordinate axes in A^m, m >= n, given by
// x_i = phi_ij(x_j) * eps along the x_j-axis; phi_ij == 0 for j > n.  Indices
// are 1-based; each phi_ij is a univariate Laurent polynomial in x_j over the
// scalar ring.
struct CnDeformation {
  int n = 0;
  int m = 0;
  FieldSpec field;
  std::map<std::pair<int, int>, LaurentPoly> phi;
};

CnDeformation make_cn(int n, int m, const FieldSpec& field);
// Installs phi_ij; throws on bad indices (i == j, i > m, j > n).  Zero values
// erase the entry.
void cn_set(CnDeformation& d, int i, int j, const LaurentPoly& value);
// Null when the entry is absent (identically zero).
const LaurentPoly* cn_get(const CnDeformation& d, int i, int j);

int cn_pole_order(const CnDeformation& d, int i, int j);
mpq_class cn_residue(const CnDeformation& d, int i, int j);
int cn_max_pole_order(const CnDeformation& d);

// Drops strictly positive exponents (they can be absorbed into coordinates);
// keeps polar parts and constants.  Idempotent.
CnDeformation cn_normalize(const CnDeformation& d);
bool cn_is_normalized(const CnDeformation& d);

// n >= 3: no poles anywhere.  n = 2: phi_12, phi_21 have at most simple poles
// with equal residues, and the ambient rows i > 2 are pole-free.
bool cn_is_flat(const CnDeformation& d);
// All poles simple and the residue matrix symmetric (absent entries count 0).
bool cn_is_kflat(const CnDeformation& d);
// n >= 3 only: every pole order <= n-2.
bool cn_chow_vanishing(const CnDeformation& d);

// Coordinate rescaling x_i -> lambda_i^-1 x_i: phi_ij(x_j) becomes
// lambda_i * phi_ij(lambda_j^-1 x_j).  lambda has m entries, all nonzero.
CnDeformation cn_lambda_rescale(const CnDeformation& d, const std::vector<mpq_class>& lambda);

// Projection u = sum_i x_i, v = sum_i (abar_i + aprime_i eps) x_i with the
// abar_i pairwise distinct.  The image divisor is (base - B*eps = 0) where
// base = prod_j (v - abar_j u); both are Laurent in u with coefficients in
// k[v].  The divisor is a relative Cartier divisor iff B has no pole.
struct CnProjection {
  LaurentPoly base;
  LaurentPoly B;
};
CnProjection cn_projection_equation(const CnDeformation& d,
                                    const std::vector<mpq_class>& abar,
                                    const std::vector<mpq_class>& aprime);

// Seeded search for a projection whose equation fails to be Cartier: plain
// draws of (abar, aprime), then draws preceded by a lambda-rescaling.  Finding
// a polar B refutes K-flatness; exhausting the budget proves nothing.
struct CnRefutation {
  bool refuted = false;
  int draws = 0;
  std::vector<mpq_class> abar, aprime, lambda;
  std::string polarTerm;
};
CnRefutation cn_refute_by_projection(const CnDeformation& d, std::uint64_t seed,
                                     int plainDraws = 25, int lambdaDraws = 25);

// Central fiber of a simple-pole deformation with m == n, in k[x_1..x_n]:
// the quadrics sum gamma_ij x_i x_j whose residue sums sum_{i != l}
// gamma_il c_il agree for every l, plus all cubic monomials divisible by two
// distinct variables.  Throws on non-simple poles or m > n.
Ideal cn_central_fiber_ideal(const CnDeformation& d);

// Smoothing family from distinct p_i and nonzero lambda_i:
// (p_i - p_j) x_i x_j + (lambda_j x_i - lambda_i x_j) t = 0, with first-order
// data e_ij = lambda_i / (p_i - p_j) along the x_j-axis.
struct CnSmoothing {
  RingPtr ring;  // k[x_1..x_n, t]
  std::vector<Poly> equations;
  std::vector<std::vector<mpq_class>> e;  // e[i][j], 0-based, e[i][i] unused
};
CnSmoothing cn_smoothing(const FieldSpec& field, const std::vector<mpq_class>& p,
                         const std::vector<mpq_class>& lambda);
CnDeformation cn_smoothing_first_order(const FieldSpec& field,
                                       const std::vector<mpq_class>& p,
                                       const std::vector<mpq_class>& lambda);

// Rank of the span of the sample vectors (e_ij : i != j) in k^(n(n-1)), raw
// and modulo the n-dimensional translation subspace e_ij -> e_ij - a_i.
struct CnSpanRank {
  int raw = 0;
  int moduloTranslations = 0;
};
CnSpanRank cn_smoothing_span_rank(
    const FieldSpec& field,
    const std::vector<std::pair<std::vector<mpq_class>, std::vector<mpq_class>>>& samples,
    int n);

// Text format: one line "i j <laurent expression in x_j>" per nonzero entry.
std::string cn_str(const CnDeformation& d);
CnDeformation cn_parse(const std::string& text, int n, int m, const FieldSpec& field);

}  // namespace kflat
