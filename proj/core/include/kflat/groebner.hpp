#pragma once

#include <map>
#include <optional>

#include "kflat/poly.hpp"

namespace kflat {

// Finitely generated ideal with a per-order cache of reduced Groebner bases.
// Generators are immutable after construction, so the cache is observationally
// transparent.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Poly> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& gens() const { return gens_; }

  const std::vector<Poly>& groebner() const;  // ring's own order
  const std::vector<Poly>& groebner(const MonomialOrder& order) const;

  bool contains(const Poly& p) const;
  bool isZeroIdeal() const { return gens_.empty(); }
  bool isUnitIdeal() const;

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Poly> gens_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

// Reduced Groebner basis: monic, pairwise irreducible, sorted by descending
// lead monomial.  Deterministic: sugar-strategy pair selection with ties
// broken by pair creation index.
std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                             const MonomialOrder& order);

// Full normal form of p modulo a (not necessarily complete) monic basis.
Poly normal_form(const Poly& p, const std::vector<Poly>& basis,
                 const MonomialOrder& order);

bool ideal_member(const Poly& p, const Ideal& I);
bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);

// I cap J, computed by eliminating t from t*I + (1-t)*J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);

// Colon ideal (I : f).
Ideal ideal_quotient(const Ideal& I, const Poly& f);

// Saturation (I : f^infinity) as a stabilized iterated quotient.
Ideal saturate(const Ideal& I, const Poly& f);

// Exact division; nullopt when f does not divide p.
std::optional<Poly> exact_divide(const Poly& p, const Poly& f);

// Policy for element-wise powers over small prime fields, where the
// multinomial-support formula is only guaranteed for |k| > m.
enum class TinyFieldPolicy {
  Refuse,           // reject |k| <= m
  MultinomialSpan,  // use the base-p multinomial support formula anyway
  ExhaustiveScan,   // enumerate (sum c_i r_i)^m over all c in k^s
};

// Ideal generated by the m-th powers of all elements of I.  Realized by the
// monomials r^E in the generators whose multinomial coefficient (m; E) is
// nonzero in the coefficient field.
Ideal elementwise_power(const Ideal& I, unsigned long m,
                        TinyFieldPolicy policy = TinyFieldPolicy::Refuse);

// Removes the components supported at the origin: saturation by the chosen
// variable, or by the maximal ideal (x_1, ..., x_n) when none is given.
// Intended for ideals whose embedded components sit at the origin and whose
// remaining components are positive-dimensional.
Ideal pure_part(const Ideal& I, std::optional<int> var = std::nullopt);

struct LengthResult {
  bool stabilized = false;
  long length = -1;
  long truncationDegree = 0;
};

// Vector space dimension of outer/inner for nested ideals inner <= outer
// with finite quotient, by comparing standard monomial counts in growing
// degree truncations (degree-compatible order).  Non-stabilizing quotients
// are reported, not guessed.
LengthResult length_between(const Ideal& inner, const Ideal& outer);

struct TorsionResult {
  Ideal pure;
  LengthResult len;
};

// Length of pure_part(I)/I.
TorsionResult torsion_length(const Ideal& I);

// Number of monomials of total degree <= maxdeg outside the lead-term ideal
// of the given basis (leads taken w.r.t. each polynomial's own ring order).
long count_standard_monomials(const RingPtr& ring, const std::vector<Poly>& basis,
                              long maxdeg);

}  // namespace kflat
