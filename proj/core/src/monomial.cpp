#include "kflat/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace kflat {

long total_degree(const Exps& e) {
  long d = 0;
  for (int32_t x : e) d += x;
  return d;
}

bool exps_divides(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exps exps_mul(const Exps& a, const Exps& b) {
  Exps r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] += b[i];
  return r;
}

Exps exps_div(const Exps& a, const Exps& b) {
  Exps r(a);
  for (size_t i = 0; i < a.size(); ++i) {
    r[i] -= b[i];
    if (r[i] < 0) throw std::logic_error("monomial division underflow");
  }
  return r;
}

Exps exps_lcm(const Exps& a, const Exps& b) {
  Exps r(a);
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

bool exps_coprime(const Exps& a, const Exps& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

namespace {

int cmp_lex(const Exps& a, const Exps& b, size_t lo, size_t hi) {
  for (size_t i = lo; i < hi; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int cmp_grevlex(const Exps& a, const Exps& b, size_t lo, size_t hi) {
  long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da > db ? 1 : -1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Exps& a, const Exps& b) const {
  switch (kind) {
    case OrderKind::Lex:
      return cmp_lex(a, b, 0, a.size());
    case OrderKind::GrevLex:
      return cmp_grevlex(a, b, 0, a.size());
    case OrderKind::Elim: {
      size_t k = static_cast<size_t>(elimBlock);
      int c = cmp_grevlex(a, b, 0, std::min(k, a.size()));
      if (c != 0) return c;
      return cmp_grevlex(a, b, std::min(k, a.size()), a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::GrevLex:
      return "grevlex";
    case OrderKind::Elim:
      return "elim:" + std::to_string(elimBlock);
  }
  return "";
}

MonomialOrder MonomialOrder::parse(const std::string& s) {
  if (s == "lex") return lex();
  if (s == "grevlex") return grevlex();
  if (s.rfind("elim:", 0) == 0) return elim(std::stoi(s.substr(5)));
  throw std::invalid_argument("unknown order \"" + s + "\" (expected lex, grevlex or elim:<k>)");
}

}  // namespace kflat
