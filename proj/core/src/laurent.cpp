#include "kflat/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kflat {

namespace {
void require_compatible(const LaurentPoly& a, const LaurentPoly& b,
                        const RingPtr& abase, const RingPtr& bbase) {
  if (!same_ring(abase, bbase) || a.lvar() != b.lvar())
    throw std::invalid_argument("mixed Laurent rings");
}
}  // namespace

LaurentPoly LaurentPoly::zero(RingPtr base, std::string lvar) {
  LaurentPoly l;
  l.base_ = std::move(base);
  l.lvar_ = std::move(lvar);
  return l;
}

LaurentPoly LaurentPoly::constant(RingPtr base, std::string lvar, const mpq_class& c) {
  return term(base, lvar, 0, Poly::constant(base, c));
}

LaurentPoly LaurentPoly::term(RingPtr base, std::string lvar, int k, Poly coeff) {
  LaurentPoly l = zero(std::move(base), std::move(lvar));
  l.insert(k, coeff);
  return l;
}

LaurentPoly LaurentPoly::fromPoly(Poly coeff, std::string lvar) {
  RingPtr base = coeff.ring();
  return term(std::move(base), std::move(lvar), 0, std::move(coeff));
}

LaurentPoly LaurentPoly::splitPoly(const Poly& p, const std::string& lvar) {
  const RingPtr& r = p.ring();
  int li = r->varIndex(lvar);
  if (li < 0) throw std::invalid_argument("splitPoly: no such variable: " + lvar);
  std::vector<std::string> baseVars;
  for (size_t i = 0; i < r->vars.size(); ++i)
    if (static_cast<int>(i) != li) baseVars.push_back(r->vars[i]);
  RingPtr base = make_ring(r->field, baseVars, r->order);
  LaurentPoly l = zero(base, lvar);
  for (const auto& t : p.terms()) {
    Exps be;
    be.reserve(t.e.size() - 1);
    for (size_t i = 0; i < t.e.size(); ++i)
      if (static_cast<int>(i) != li) be.push_back(t.e[i]);
    l.insert(t.e[li], Poly::monomial(base, be, t.c));
  }
  return l;
}

void LaurentPoly::insert(int k, const Poly& p) {
  if (p.isZero()) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, p);
  } else {
    it->second = it->second + p;
    if (it->second.isZero()) c_.erase(it);
  }
}

Poly LaurentPoly::coeff(int k) const {
  auto it = c_.find(k);
  return it == c_.end() ? Poly::zero(base_) : it->second;
}

int LaurentPoly::ord() const { return c_.empty() ? 0 : c_.begin()->first; }
int LaurentPoly::topExp() const { return c_.empty() ? 0 : c_.rbegin()->first; }

LaurentPoly LaurentPoly::operator-() const { return scaled(-1); }

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_compatible(*this, o, base_, o.base_);
  LaurentPoly r = *this;
  for (const auto& [k, p] : o.c_) r.insert(k, p);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + o.scaled(-1); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  require_compatible(*this, o, base_, o.base_);
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [ka, pa] : c_)
    for (const auto& [kb, pb] : o.c_) r.insert(ka + kb, pa * pb);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (!same_ring(base_, o.base_) || lvar_ != o.lvar_) return false;
  if (c_.size() != o.c_.size()) return false;
  auto it = c_.begin(), jt = o.c_.begin();
  for (; it != c_.end(); ++it, ++jt)
    if (it->first != jt->first || !(it->second == jt->second)) return false;
  return true;
}

LaurentPoly LaurentPoly::scaled(const mpq_class& c) const {
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [k, p] : c_) r.insert(k, p.scaled(c));
  return r;
}

LaurentPoly LaurentPoly::mulPoly(const Poly& p) const {
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [k, q] : c_) r.insert(k, q * p);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [j, p] : c_) r.insert(j + k, p);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
  LaurentPoly r = constant(base_, lvar_, 1);
  LaurentPoly b = *this;
  while (n > 0) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n) b = b * b;
  }
  return r;
}

LaurentPoly LaurentPoly::regularPart() const {
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [k, p] : c_)
    if (k >= 0) r.insert(k, p);
  return r;
}

LaurentPoly LaurentPoly::strictPolarPart() const {
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [k, p] : c_)
    if (k < 0) r.insert(k, p);
  return r;
}

LaurentPoly LaurentPoly::nonpositivePart() const {
  LaurentPoly r = zero(base_, lvar_);
  for (const auto& [k, p] : c_)
    if (k <= 0) r.insert(k, p);
  return r;
}

Poly LaurentPoly::evalAt(const mpq_class& v) const {
  if (v == 0) throw std::domain_error("Laurent evaluation at 0");
  Poly acc = Poly::zero(base_);
  const FieldSpec& f = base_->field;
  for (const auto& [k, p] : c_) {
    mpq_class vk(1);
    for (int i = 0; i < (k < 0 ? -k : k); ++i) vk = f.mul(vk, v);
    if (k < 0) vk = f.inv(vk);
    acc = acc + p.scaled(vk);
  }
  return acc;
}

Poly LaurentPoly::toPoly(const RingPtr& ring) const {
  if (!c_.empty() && c_.begin()->first < 0)
    throw std::domain_error("Laurent polynomial has a pole; cannot convert to polynomial");
  int li = ring->varIndex(lvar_);
  if (li < 0) throw std::invalid_argument("toPoly: target ring lacks " + lvar_);
  std::vector<int> map(base_->vars.size());
  for (size_t i = 0; i < base_->vars.size(); ++i) {
    map[i] = ring->varIndex(base_->vars[i]);
    if (map[i] < 0) throw std::invalid_argument("toPoly: target ring lacks " + base_->vars[i]);
  }
  std::vector<Term> out;
  for (const auto& [k, p] : c_) {
    for (const auto& t : p.terms()) {
      Exps e(ring->vars.size(), 0);
      e[li] = k;
      for (size_t i = 0; i < map.size(); ++i) e[map[i]] += t.e[i];
      out.push_back(Term{std::move(e), t.c});
    }
  }
  return Poly::fromTerms(ring, std::move(out));
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  // flatten into scalar terms, highest Laurent exponent first
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    int k = it->first;
    for (const auto& t : it->second.terms()) {
      mpq_class c = t.c;
      if (first) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
      std::string mono;
      if (k != 0) {
        mono = lvar_;
        if (k != 1) mono += "^" + std::to_string(k);
      }
      for (size_t v = 0; v < t.e.size(); ++v) {
        if (t.e[v] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += base_->vars[v];
        if (t.e[v] != 1) mono += "^" + std::to_string(t.e[v]);
      }
      if (mono.empty()) {
        os << scalar_str(c);
      } else if (c == 1) {
        os << mono;
      } else {
        os << scalar_str(c) << "*" << mono;
      }
      first = false;
    }
  }
  return os.str();
}

}  // namespace kflat
