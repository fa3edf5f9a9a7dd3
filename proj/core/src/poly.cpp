#include "kflat/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kflat {

int Ring::varIndex(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return static_cast<int>(i);
  return -1;
}

RingPtr make_ring(FieldSpec field, std::vector<std::string> vars, MonomialOrder order) {
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j])
        throw std::invalid_argument("duplicate variable name: " + vars[i]);
  return std::make_shared<Ring>(Ring{field, std::move(vars), order});
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!same_ring(a, b)) throw std::invalid_argument("mixed polynomial rings");
}

struct TermCmpDesc {
  const MonomialOrder* order;
  bool operator()(const Exps& a, const Exps& b) const { return order->cmp(a, b) > 0; }
};

}  // namespace

Poly Poly::zero(RingPtr r) {
  Poly p;
  p.ring_ = std::move(r);
  return p;
}

Poly Poly::constant(RingPtr r, const mpq_class& c) {
  return monomial(std::move(r), Exps(), c);
}

Poly Poly::variable(RingPtr r, int idx) {
  if (idx < 0 || idx >= static_cast<int>(r->vars.size()))
    throw std::invalid_argument("variable index out of range");
  Exps e(r->vars.size(), 0);
  e[idx] = 1;
  return monomial(std::move(r), std::move(e), 1);
}

Poly Poly::variable(RingPtr r, const std::string& name) {
  int idx = r->varIndex(name);
  if (idx < 0) throw std::invalid_argument("no such variable: " + name);
  return variable(std::move(r), idx);
}

Poly Poly::monomial(RingPtr r, Exps e, const mpq_class& c) {
  e.resize(r->vars.size(), 0);
  return fromTerms(std::move(r), {Term{std::move(e), c}});
}

Poly Poly::fromTerms(RingPtr r, std::vector<Term> terms) {
  TermCmpDesc cmp{&r->order};
  std::map<Exps, mpq_class, TermCmpDesc> acc(cmp);
  for (auto& t : terms) {
    if (t.e.size() != r->vars.size())
      throw std::invalid_argument("exponent vector has wrong arity");
    for (int32_t x : t.e)
      if (x < 0) throw std::invalid_argument("negative exponent in polynomial");
    acc[t.e] += t.c;
  }
  Poly p;
  p.ring_ = std::move(r);
  for (auto& [e, c] : acc) {
    mpq_class cc = p.ring_->field.norm(c);
    if (cc != 0) p.t_.push_back(Term{e, cc});
  }
  return p;
}

bool Poly::isConstant() const {
  return t_.empty() || (t_.size() == 1 && total_degree(t_[0].e) == 0);
}

mpq_class Poly::constantValue() const {
  if (t_.empty()) return 0;
  if (!isConstant()) throw std::logic_error("polynomial is not constant");
  return t_[0].c;
}

const Term& Poly::leadTerm() const {
  if (t_.empty()) throw std::logic_error("zero polynomial has no lead term");
  return t_[0];
}

long Poly::totalDegree() const {
  long d = -1;
  for (const auto& t : t_) d = std::max(d, total_degree(t.e));
  return d;
}

long Poly::degreeIn(int var) const {
  long d = -1;
  for (const auto& t : t_) d = std::max(d, static_cast<long>(t.e[var]));
  return d;
}

long Poly::lowDegree() const {
  if (t_.empty()) return -1;
  long d = total_degree(t_[0].e);
  for (const auto& t : t_) d = std::min(d, total_degree(t.e));
  return d;
}

bool Poly::isHomogeneous() const {
  if (t_.empty()) return true;
  long d = total_degree(t_[0].e);
  for (const auto& t : t_)
    if (total_degree(t.e) != d) return false;
  return true;
}

mpq_class Poly::coeffOf(const Exps& e) const {
  for (const auto& t : t_)
    if (t.e == e) return t.c;
  return 0;
}

Poly Poly::operator-() const { return scaled(-1); }

Poly Poly::operator+(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  // merge two descending term lists
  Poly r;
  r.ring_ = ring_;
  const auto& order = ring_->order;
  size_t i = 0, j = 0;
  while (i < t_.size() && j < o.t_.size()) {
    int c = order.cmp(t_[i].e, o.t_[j].e);
    if (c > 0) {
      r.t_.push_back(t_[i++]);
    } else if (c < 0) {
      r.t_.push_back(o.t_[j++]);
    } else {
      mpq_class s = ring_->field.add(t_[i].c, o.t_[j].c);
      if (s != 0) r.t_.push_back(Term{t_[i].e, s});
      ++i, ++j;
    }
  }
  for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
  for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
  require_same_ring(ring_, o.ring_);
  TermCmpDesc cmp{&ring_->order};
  std::map<Exps, mpq_class, TermCmpDesc> acc(cmp);
  for (const auto& a : t_)
    for (const auto& b : o.t_) acc[exps_mul(a.e, b.e)] += a.c * b.c;
  Poly r;
  r.ring_ = ring_;
  for (auto& [e, c] : acc) {
    mpq_class cc = ring_->field.norm(c);
    if (cc != 0) r.t_.push_back(Term{e, cc});
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].e != o.t_[i].e || t_[i].c != o.t_[i].c) return false;
  return true;
}

Poly Poly::scaled(const mpq_class& c) const {
  mpq_class cc = ring_->field.norm(c);
  Poly r;
  r.ring_ = ring_;
  if (cc == 0) return r;
  r.t_ = t_;
  for (auto& t : r.t_) t.c = ring_->field.mul(t.c, cc);
  return r;
}

Poly Poly::mulMonomial(const Exps& e, const mpq_class& c) const {
  mpq_class cc = ring_->field.norm(c);
  Poly r;
  r.ring_ = ring_;
  if (cc == 0) return r;
  r.t_.reserve(t_.size());
  for (const auto& t : t_) r.t_.push_back(Term{exps_mul(t.e, e), ring_->field.mul(t.c, cc)});
  return r;
}

Poly Poly::pow(unsigned long n) const {
  Poly r = Poly::constant(ring_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return r;
}

Poly Poly::monic() const {
  if (t_.empty()) return *this;
  return scaled(ring_->field.inv(t_[0].c));
}

Poly Poly::derivative(int var) const {
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (t.e[var] == 0) continue;
    Term d = t;
    d.c = t.c * t.e[var];
    d.e[var] -= 1;
    out.push_back(std::move(d));
  }
  return fromTerms(ring_, std::move(out));
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != ring_->vars.size())
    throw std::invalid_argument("substitute: one image per variable required");
  RingPtr target = images.empty() ? ring_ : images[0].ring();
  for (const auto& im : images) require_same_ring(im.ring(), target);
  // memoized variable powers
  std::vector<std::vector<Poly>> pows(images.size());
  auto power = [&](size_t v, int32_t e) {
    auto& tab = pows[v];
    if (tab.empty()) tab.push_back(Poly::constant(target, 1));
    while (static_cast<int32_t>(tab.size()) <= e) tab.push_back(tab.back() * images[v]);
    return tab[e];
  };
  Poly acc = Poly::zero(target);
  for (const auto& t : t_) {
    Poly prod = Poly::constant(target, t.c);
    for (size_t v = 0; v < images.size(); ++v)
      if (t.e[v] > 0) prod = prod * power(v, t.e[v]);
    acc = acc + prod;
  }
  return acc;
}

Poly Poly::withRing(RingPtr r) const {
  if (!ring_) return Poly::zero(std::move(r));
  if (r->field != ring_->field || r->vars != ring_->vars)
    throw std::invalid_argument("withRing: field/variables mismatch");
  Poly out;
  out.ring_ = std::move(r);
  out.t_ = t_;
  std::sort(out.t_.begin(), out.t_.end(), [&](const Term& a, const Term& b) {
    return out.ring_->order.cmp(a.e, b.e) > 0;
  });
  return out;
}

Poly map_into(const Poly& p, const RingPtr& target) {
  const RingPtr& src = p.ring();
  if (src->field != target->field)
    throw std::invalid_argument("map_into: field mismatch");
  std::vector<int> map(src->vars.size(), -1);
  for (size_t i = 0; i < src->vars.size(); ++i)
    map[i] = target->varIndex(src->vars[i]);
  std::vector<Term> out;
  out.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    Exps e(target->vars.size(), 0);
    for (size_t i = 0; i < map.size(); ++i) {
      if (t.e[i] == 0) continue;
      if (map[i] < 0)
        throw std::invalid_argument("map_into: target ring lacks variable " +
                                    src->vars[i]);
      e[map[i]] = t.e[i];
    }
    out.push_back(Term{std::move(e), t.c});
  }
  return Poly::fromTerms(target, std::move(out));
}

std::string scalar_str(const mpq_class& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : t_) {
    mpq_class c = t.c;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      if (c < 0) {
        os << " - ";
        c = -c;
      } else {
        os << " + ";
      }
    }
    std::string mono;
    for (size_t v = 0; v < t.e.size(); ++v) {
      if (t.e[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars[v];
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
  return os.str();
}

}  // namespace kflat
