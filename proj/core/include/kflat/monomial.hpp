#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kflat {

// Exponent vector of a monomial; one entry per ring variable.
using Exps = std::vector<int32_t>;

long total_degree(const Exps& e);
bool exps_divides(const Exps& a, const Exps& b);  // a | b
Exps exps_mul(const Exps& a, const Exps& b);
Exps exps_div(const Exps& a, const Exps& b);  // requires b | a
Exps exps_lcm(const Exps& a, const Exps& b);
bool exps_coprime(const Exps& a, const Exps& b);

enum class OrderKind { Lex, GrevLex, Elim };

// Term order on monomials.  Elim(k) eliminates the first k variables: the
// block of the first k exponents is compared by graded reverse lexicographic
// order first, then the remaining block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GrevLex;
  int elimBlock = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GrevLex, 0}; }
  static MonomialOrder elim(int k) { return {OrderKind::Elim, k}; }

  // +1 if a > b, 0 if equal, -1 if a < b.
  int cmp(const Exps& a, const Exps& b) const;

  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && elimBlock == o.elimBlock;
  }

  std::string str() const;
  static MonomialOrder parse(const std::string& s);
};

}  // namespace kflat
