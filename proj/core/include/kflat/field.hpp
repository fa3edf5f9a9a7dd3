#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kflat {

// Exact coefficient domain: the rationals, or a prime field F_p with
// machine-word p.  Elements are carried as mpq_class values; for F_p the
// canonical representative is an integer in [0, p) with denominator 1.
class FieldSpec {
public:
  FieldSpec() : p_(0) {}  // rationals
  static FieldSpec rationals() { return FieldSpec(); }
  static FieldSpec prime(unsigned long p);

  bool isRationals() const { return p_ == 0; }
  bool isPrime() const { return p_ != 0; }
  unsigned long characteristic() const { return p_; }

  bool operator==(const FieldSpec& o) const { return p_ == o.p_; }
  bool operator!=(const FieldSpec& o) const { return p_ != o.p_; }

  mpq_class norm(const mpq_class& a) const;
  mpq_class add(const mpq_class& a, const mpq_class& b) const { return norm(a + b); }
  mpq_class sub(const mpq_class& a, const mpq_class& b) const { return norm(a - b); }
  mpq_class mul(const mpq_class& a, const mpq_class& b) const { return norm(a * b); }
  mpq_class neg(const mpq_class& a) const { return norm(-a); }
  mpq_class inv(const mpq_class& a) const;
  mpq_class div(const mpq_class& a, const mpq_class& b) const { return mul(a, inv(b)); }
  mpq_class fromLong(long v) const { return norm(mpq_class(v)); }

  std::string str() const;  // "Q" or "Fp:<p>"
  static FieldSpec parse(const std::string& s);

private:
  explicit FieldSpec(unsigned long p) : p_(p) {}
  unsigned long p_;
};

// True when the multinomial coefficient (m; parts) is nonzero in the given
// field: always in characteristic 0, and by the base-p no-carry digit test
// in characteristic p.  Requires sum(parts) == m.
bool multinomial_nonzero(const FieldSpec& field, unsigned long m,
                         const std::vector<unsigned long>& parts);

// Exact integer multinomial coefficient m! / prod(parts_i!).
mpz_class multinomial_exact(unsigned long m, const std::vector<unsigned long>& parts);

}  // namespace kflat
