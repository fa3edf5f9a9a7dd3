#include "kflat/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace kflat {

Semigroup make_semigroup(long a, long c) {
  if (a < 1 || c < 1) throw std::domain_error("semigroup generators must be positive");
  if (std::gcd(a, c) != 1) throw std::domain_error("semigroup generators must be coprime");
  return Semigroup{a, c};
}

bool Semigroup::contains(long e) const {
  if (e < 0) return false;
  if (e > frobenius()) return true;
  for (long alpha = 0; alpha * a <= e; ++alpha)
    if ((e - alpha * a) % c == 0) return true;
  return false;
}

long Semigroup::frobenius() const { return a * c - a - c; }

std::vector<long> Semigroup::gaps() const {
  std::vector<long> out;
  for (long e = 1; e <= frobenius(); ++e)
    if (!contains(e)) out.push_back(e);
  return out;
}

long Semigroup::gapCount() const { return (a - 1) * (c - 1) / 2; }

SemigroupLemmaReport check_semigroup_lemma(const Semigroup& E) {
  const long a = E.a, c = E.c, ac = E.a * E.c;
  SemigroupLemmaReport rep;
  rep.aPass = true;
  rep.bPass = true;
  const long amax = std::min(ac - a, ac - c);
  for (long m = 1; m <= amax; ++m) {
    bool lhs = E.contains(ac - a - m) && E.contains(ac - c - m);
    bool rhs = E.contains(ac - a - c - m);
    if (lhs != rhs) {
      rep.aPass = false;
      if (!rep.counterexample) rep.counterexample = m;
      break;
    }
  }
  for (long m = 0; m <= ac - a - c; ++m) {
    bool lhs = E.contains(ac - a - c - m);
    bool rhs = !E.contains(m);
    if (lhs != rhs) {
      rep.bPass = false;
      if (!rep.counterexample) rep.counterexample = m;
      break;
    }
  }
  return rep;
}

long monomial_cflat_nonglobal_dim(const Semigroup& E) {
  long count = 0;
  for (long m = 1; m <= E.frobenius(); ++m)
    if (!E.contains(m)) ++count;
  return count;
}

}  // namespace kflat
