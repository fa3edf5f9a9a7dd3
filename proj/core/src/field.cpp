#include "kflat/field.hpp"

namespace kflat {

FieldSpec FieldSpec::prime(unsigned long p) {
  mpz_class z(static_cast<unsigned long>(p));
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("field modulus must be prime: " + std::to_string(p));
  return FieldSpec(p);
}

mpq_class FieldSpec::norm(const mpq_class& a) const {
  if (p_ == 0) {
    mpq_class r = a;
    r.canonicalize();
    return r;
  }
  mpz_class p(p_);
  mpz_class num = a.get_num(), den = a.get_den();
  mpz_class dmod = den % p;
  if (dmod < 0) dmod += p;
  if (dmod == 0) throw std::domain_error("division by zero in F_" + std::to_string(p_));
  mpz_class dinv;
  if (mpz_invert(dinv.get_mpz_t(), dmod.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::domain_error("non-invertible denominator in F_" + std::to_string(p_));
  mpz_class r = (num % p) * dinv % p;
  if (r < 0) r += p;
  return mpq_class(r);
}

mpq_class FieldSpec::inv(const mpq_class& a) const {
  if (a == 0) throw std::domain_error("division by zero");
  if (p_ == 0) return 1 / a;
  return norm(mpq_class(1) / a);
}

std::string FieldSpec::str() const {
  return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0) {
    unsigned long p = std::stoul(s.substr(3));
    return prime(p);
  }
  throw std::invalid_argument("unknown field \"" + s + "\" (expected Q or Fp:<p>)");
}

bool multinomial_nonzero(const FieldSpec& field, unsigned long m,
                         const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long e : parts) sum += e;
  if (sum != m) throw std::invalid_argument("multinomial parts must sum to m");
  if (field.isRationals()) return true;
  // Kummer: (m; parts) is prime to p exactly when adding the parts in base p
  // produces no carry, i.e. the digits of the parts sum to the digit of m in
  // every position.
  unsigned long p = field.characteristic();
  std::vector<unsigned long> rest(parts);
  unsigned long mm = m;
  while (mm > 0) {
    unsigned long digitSum = 0;
    for (auto& e : rest) {
      digitSum += e % p;
      e /= p;
    }
    if (digitSum != mm % p) return false;
    mm /= p;
  }
  for (unsigned long e : rest)
    if (e != 0) return false;  // cannot happen when sum == m
  return true;
}

mpz_class multinomial_exact(unsigned long m, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (unsigned long e : parts) sum += e;
  if (sum != m) throw std::invalid_argument("multinomial parts must sum to m");
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), m);
  for (unsigned long e : parts) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), e);
    num /= f;
  }
  return num;
}

}  // namespace kflat
