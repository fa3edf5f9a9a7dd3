#pragma once

#include <optional>
#include <vector>

namespace kflat {

// Numerical semigroup E = N a + N c with gcd(a, c) = 1, a, c >= 1.
struct Semigroup {
  long a = 0;
  long c = 0;

  bool contains(long e) const;     // negative e are never members
  long frobenius() const;          // ac - a - c (equal to -1 when a or c is 1)
  std::vector<long> gaps() const;  // positive integers outside E
  long gapCount() const;           // (a-1)(c-1)/2
};

Semigroup make_semigroup(long a, long c);  // throws unless coprime, >= 1

// Exhaustive check of the two semigroup identities used by the C-flatness
// computation:
//   (a) for 1 <= m <= min(ac-a, ac-c):
//       ac-a-m and ac-c-m in E  iff  ac-a-c-m in E
//       (at m = 0 the left side always holds and the right never does, so the
//        check starts at 1);
//   (b) for 0 <= m <= ac-a-c:  ac-a-c-m in E  iff  m not in E.
struct SemigroupLemmaReport {
  bool aPass = false;
  bool bPass = false;
  std::optional<long> counterexample;  // first failing m, if any
};
SemigroupLemmaReport check_semigroup_lemma(const Semigroup& E);

// Dimension of the space of C-flat non-globalizing first-order deformations
// of the monomial curve x^a = y^c: the number of gaps of E, which equals
// (a-1)(c-1)/2.
long monomial_cflat_nonglobal_dim(const Semigroup& E);

}  // namespace kflat
