#pragma once

#include <map>

#include "kflat/poly.hpp"

namespace kflat {

// Laurent polynomial: integer powers of one distinguished variable with
// polynomial coefficients in the remaining ("base") variables.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero(RingPtr base, std::string lvar);
  static LaurentPoly constant(RingPtr base, std::string lvar, const mpq_class& c);
  static LaurentPoly term(RingPtr base, std::string lvar, int k, Poly coeff);
  static LaurentPoly fromPoly(Poly coeff, std::string lvar);  // exponent 0

  // Splits a polynomial over a ring containing `lvar` into a Laurent
  // polynomial whose base ring drops that variable.
  static LaurentPoly splitPoly(const Poly& p, const std::string& lvar);

  const RingPtr& base() const { return base_; }
  const std::string& lvar() const { return lvar_; }
  const std::map<int, Poly>& coeffs() const { return c_; }

  bool isZero() const { return c_.empty(); }
  Poly coeff(int k) const;
  int ord() const;        // minimal exponent; 0 for the zero polynomial
  int topExp() const;     // maximal exponent; 0 for the zero polynomial
  int poleOrder() const { return ord() < 0 ? -ord() : 0; }
  Poly residue() const { return coeff(-1); }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const mpq_class& c) const;
  LaurentPoly mulPoly(const Poly& p) const;
  LaurentPoly shifted(int k) const;  // multiply by lvar^k
  LaurentPoly pow(unsigned long n) const;

  LaurentPoly regularPart() const;      // exponents >= 0
  LaurentPoly strictPolarPart() const;  // exponents < 0
  LaurentPoly nonpositivePart() const;  // exponents <= 0

  // Evaluation of the Laurent variable at a nonzero scalar.
  Poly evalAt(const mpq_class& v) const;

  // Converts to a plain polynomial over `ring`, which must contain the base
  // variables and the Laurent variable.  Fails on poles.
  Poly toPoly(const RingPtr& ring) const;

  std::string str() const;

private:
  RingPtr base_;
  std::string lvar_;
  std::map<int, Poly> c_;

  void insert(int k, const Poly& p);
};

}  // namespace kflat
