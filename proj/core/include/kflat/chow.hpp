#pragma once

#include <cstdint>
#include <optional>

#include "kflat/groebner.hpp"

namespace kflat {

// A projection recipe applied by pullback (coordinate substitution).
//   linearFromPoint(a):   x_i -> x_i - a_i * x_last, one a_i per kept
//                         variable (projection from a point with last
//                         coordinate normalized to 1);
//   linearToSubspace(l):  x_i -> x_i - l_i for the first |l| variables, the
//                         l_i linear forms in the remaining ones;
//   affineNonlinear(phi): x_i -> x_i - phi_i with phi_i vanishing wherever
//                         the trailing variables do.
struct ProjectionSpec {
  enum class Kind { LinearFromPoint, LinearToSubspace, AffineNonlinear };
  Kind kind = Kind::LinearFromPoint;
  std::vector<mpq_class> center;
  std::vector<Poly> forms;

  static ProjectionSpec linearFromPoint(std::vector<mpq_class> a);
  static ProjectionSpec linearToSubspace(std::vector<Poly> ells);
  static ProjectionSpec affineNonlinear(std::vector<Poly> phis);
};

Poly apply_projection(const Poly& p, const ProjectionSpec& spec);

// Affine-chart coordinate of a linear projection with denominator 1 - ell0:
// (x_i - ell_i) * (1 + ell0 + ... + ell0^(truncDegree-1)).
Poly affine_projection_coordinate(const Poly& xi, const Poly& ell0,
                                  const Poly& elli, int truncDegree);

// Ideal generated by all partial derivatives of f of order <= m (order 0
// meaning f itself).
Ideal derivative_ideal(const Poly& f, int m);

// Chow equation ideal of the hypersurface pair (char 0 only): generated by f
// together with z^i * (order-i partials of f) for i = 1..m, inside the ring
// of f extended by the fresh variable `zname`.  m defaults to deg f when f is
// homogeneous, else to the multiplicity of f at the origin.
Ideal chow_ideal_hypersurface_pair(const Poly& f, const std::string& zname,
                                   std::optional<int> m = std::nullopt);

// Chow equation ideal of the union of the n coordinate axes in A^n: all
// squarefree-free degree-n monomials except the x_i^n, and minus x_1...x_n
// when n is odd.  Ring is Q[x_1..x_n] (grevlex).
Ideal chow_ideal_axes(int n);

// Pullback of the axes Chow form under the projection with center data a, b:
// the product over j of sum_i (a_i b_j - a_j b_i) x_i.
Poly axes_projection_pullback(const RingPtr& ring, const std::vector<mpq_class>& a,
                              const std::vector<mpq_class>& b);

// Searches for a subset I of {1..n} with sum_{i in I} w_i = n - |I|.
// Exhaustive over subsets; n <= 24.
std::optional<std::vector<int>> find_weight_subset(const std::vector<long>& w);

// A cycle component: an ideal with a multiplicity, plus a parametrization
// used for sampling points on it.
struct CycleComponent {
  Ideal ideal;
  int multiplicity = 1;
  // Parametrization t -> point: each coordinate a univariate Poly in ring
  // Q[t] (or F_p[t]).  Lines and rational curves both fit.
  std::vector<Poly> param;
};

// Chow hull of a positive cycle: pure part of the intersection of the
// elementwise multiplicity-th powers of the component ideals.
Ideal chow_hull(const std::vector<CycleComponent>& cycle,
                TinyFieldPolicy policy = TinyFieldPolicy::Refuse);

// Seeded sampling of the Chow equation ideal of a parametrized cycle in
// affine space.  Draws projection centers with integer coordinates in
// [-7, 7], forms the image equation of each component under the projection,
// raises to the multiplicity, intersects, and accumulates; stops when two
// consecutive batches leave the ideal unchanged, or when the draw budget is
// exhausted.
struct ChowSampleResult {
  Ideal ideal;
  bool stabilized = false;
  int draws = 0;
};

ChowSampleResult sample_chow_ideal(const std::vector<CycleComponent>& cycle,
                                   std::uint64_t seed, int batch = 4,
                                   int maxDraws = 64);

}  // namespace kflat
