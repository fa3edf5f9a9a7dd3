#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kflat/field.hpp"
#include "kflat/monomial.hpp"

namespace kflat {

// A polynomial ring: coefficient field, ordered list of variable names, and
// the term order used for canonical form and printing.
struct Ring {
  FieldSpec field;
  std::vector<std::string> vars;
  MonomialOrder order;

  int varIndex(const std::string& name) const;
  bool operator==(const Ring& o) const {
    return field == o.field && vars == o.vars && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Exps e;
  mpq_class c;
};

// Multivariate polynomial in canonical form: terms sorted descending by the
// ring's order, coefficients normalized and nonzero.
class Poly {
public:
  Poly() = default;  // detached zero; attach a ring before use

  static Poly zero(RingPtr r);
  static Poly constant(RingPtr r, const mpq_class& c);
  static Poly variable(RingPtr r, int idx);
  static Poly variable(RingPtr r, const std::string& name);
  static Poly monomial(RingPtr r, Exps e, const mpq_class& c);
  static Poly fromTerms(RingPtr r, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return t_; }
  bool isZero() const { return t_.empty(); }
  bool isConstant() const;
  mpq_class constantValue() const;  // requires isConstant()

  const Term& leadTerm() const;  // w.r.t. the ring order
  long totalDegree() const;      // max over terms; -1 for zero
  long degreeIn(int var) const;  // -1 for zero
  long lowDegree() const;        // min total degree over terms; -1 for zero
  bool isHomogeneous() const;
  mpq_class coeffOf(const Exps& e) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const mpq_class& c) const;
  Poly mulMonomial(const Exps& e, const mpq_class& c) const;
  Poly pow(unsigned long n) const;
  Poly monic() const;  // divide by the lead coefficient
  Poly derivative(int var) const;

  // Substitutes images[i] for variable i; all images share one target ring.
  Poly substitute(const std::vector<Poly>& images) const;

  // Same polynomial re-interpreted in another ring with identical field and
  // variables but a possibly different term order.
  Poly withRing(RingPtr r) const;

  std::string str() const;

private:
  RingPtr ring_;
  std::vector<Term> t_;
};

std::string scalar_str(const mpq_class& c);

// Maps a polynomial into another ring over the same field, matching
// variables by name; every variable that occurs must exist in the target.
Poly map_into(const Poly& p, const RingPtr& target);

}  // namespace kflat
