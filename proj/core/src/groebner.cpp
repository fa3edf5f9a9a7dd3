#include "kflat/groebner.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace kflat {

namespace {

// Full reduction assuming p and basis share one ring and basis elements are
// nonzero.  No monic assumption: lead coefficients are divided out.
Poly nf_aligned(Poly work, const std::vector<Poly>& basis) {
  const RingPtr& ring = work.ring();
  Poly rem = Poly::zero(ring);
  while (!work.isZero()) {
    const Term lt = work.leadTerm();
    const Poly* red = nullptr;
    for (const auto& g : basis) {
      if (exps_divides(g.leadTerm().e, lt.e)) {
        red = &g;
        break;
      }
    }
    if (red) {
      mpq_class c = ring->field.div(lt.c, red->leadTerm().c);
      work = work - red->mulMonomial(exps_div(lt.e, red->leadTerm().e), c);
    } else {
      Poly m = Poly::monomial(ring, lt.e, lt.c);
      rem = rem + m;
      work = work - m;
    }
  }
  return rem;
}

struct SPair {
  long sugar;
  size_t idx;
  size_t i, j;
  Exps lcm;
};

struct SPairCmp {
  bool operator()(const SPair& a, const SPair& b) const {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return a.idx < b.idx;
  }
};

}  // namespace

std::vector<Poly> buchberger(const RingPtr& ring, const std::vector<Poly>& gens,
                             const MonomialOrder& order) {
  RingPtr work = make_ring(ring->field, ring->vars, order);
  std::vector<Poly> G;
  std::vector<long> sugar;
  for (const auto& g0 : gens) {
    if (g0.isZero()) continue;
    Poly g = g0.withRing(work).monic();
    G.push_back(g);
    sugar.push_back(g.totalDegree());
  }

  std::set<SPair, SPairCmp> queue;
  std::set<std::pair<size_t, size_t>> pending;
  size_t counter = 0;
  auto addPairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Exps l = exps_lcm(G[i].leadTerm().e, G[j].leadTerm().e);
      long s = std::max(
          sugar[i] + total_degree(l) - total_degree(G[i].leadTerm().e),
          sugar[j] + total_degree(l) - total_degree(G[j].leadTerm().e));
      queue.insert(SPair{s, counter++, i, j, std::move(l)});
      pending.insert({i, j});
    }
  };
  for (size_t j = 0; j < G.size(); ++j) addPairs(j);

  while (!queue.empty()) {
    SPair pr = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pr.i, pr.j});
    const Poly& f = G[pr.i];
    const Poly& g = G[pr.j];
    if (exps_coprime(f.leadTerm().e, g.leadTerm().e)) continue;
    bool skip = false;
    for (size_t k = 0; k < G.size() && !skip; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!exps_divides(G[k].leadTerm().e, pr.lcm)) continue;
      std::pair<size_t, size_t> ik{std::min(pr.i, k), std::max(pr.i, k)};
      std::pair<size_t, size_t> jk{std::min(pr.j, k), std::max(pr.j, k)};
      if (!pending.count(ik) && !pending.count(jk)) skip = true;
    }
    if (skip) continue;
    Poly S = f.mulMonomial(exps_div(pr.lcm, f.leadTerm().e), 1) -
             g.mulMonomial(exps_div(pr.lcm, g.leadTerm().e), 1);
    Poly h = nf_aligned(std::move(S), G);
    if (h.isZero()) continue;
    h = h.monic();
    G.push_back(h);
    sugar.push_back(std::max(pr.sugar, h.totalDegree()));
    addPairs(G.size() - 1);
  }

  // minimal basis: keep only lead-irreducible elements, small leads first
  std::vector<size_t> idx(G.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    int c = order.cmp(G[a].leadTerm().e, G[b].leadTerm().e);
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<Poly> minimal;
  for (size_t i : idx) {
    bool reducible = false;
    for (const auto& h : minimal) {
      if (exps_divides(h.leadTerm().e, G[i].leadTerm().e)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) minimal.push_back(G[i]);
  }

  // interreduce tails
  std::vector<Poly> out;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    others.reserve(minimal.size() - 1);
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    out.push_back(nf_aligned(minimal[i], others).monic());
  }
  std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) {
    return order.cmp(a.leadTerm().e, b.leadTerm().e) > 0;
  });
  return out;
}

Poly normal_form(const Poly& p, const std::vector<Poly>& basis,
                 const MonomialOrder& order) {
  RingPtr work = make_ring(p.ring()->field, p.ring()->vars, order);
  std::vector<Poly> b;
  b.reserve(basis.size());
  for (const auto& g : basis)
    if (!g.isZero()) b.push_back(g.withRing(work));
  return nf_aligned(p.withRing(work), b).withRing(p.ring());
}

struct Ideal::Cache {
  std::map<std::pair<int, int>, std::vector<Poly>> bases;
};

Ideal::Ideal(RingPtr ring, std::vector<Poly> gens)
    : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.isZero()) continue;
    if (!same_ring(g.ring(), ring_))
      throw std::invalid_argument("ideal generator from a different ring");
    gens_.push_back(std::move(g));
  }
}

const std::vector<Poly>& Ideal::groebner() const { return groebner(ring_->order); }

const std::vector<Poly>& Ideal::groebner(const MonomialOrder& order) const {
  if (!cache_) throw std::logic_error("uninitialized ideal");
  std::pair<int, int> key{static_cast<int>(order.kind), order.elimBlock};
  auto it = cache_->bases.find(key);
  if (it == cache_->bases.end())
    it = cache_->bases.emplace(key, buchberger(ring_, gens_, order)).first;
  return it->second;
}

bool Ideal::contains(const Poly& p) const {
  if (p.isZero()) return true;
  return normal_form(p, groebner(), ring_->order).isZero();
}

bool Ideal::isUnitIdeal() const {
  const auto& b = groebner();
  return b.size() == 1 && b[0].isConstant() && !b[0].isZero();
}

std::string Ideal::str() const {
  if (gens_.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str();
  }
  return s;
}

bool ideal_member(const Poly& p, const Ideal& I) {
  if (!same_ring(p.ring(), I.ring()))
    throw std::invalid_argument("ideal_member: ring mismatch");
  return I.contains(p);
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_equal: ring mismatch");
  const auto& a = I.groebner();
  const auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_sum: ring mismatch");
  std::vector<Poly> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_product: ring mismatch");
  std::vector<Poly> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a * b);
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  if (!same_ring(I.ring(), J.ring()))
    throw std::invalid_argument("ideal_intersect: ring mismatch");
  const RingPtr& r = I.ring();
  if (I.isZeroIdeal() || J.isZeroIdeal()) return Ideal(r, {});
  std::vector<std::string> evars;
  evars.push_back("_t");
  evars.insert(evars.end(), r->vars.begin(), r->vars.end());
  RingPtr ext = make_ring(r->field, evars, MonomialOrder::elim(1));
  Poly t = Poly::variable(ext, 0);
  Poly oneMinusT = Poly::constant(ext, 1) - t;
  std::vector<Poly> gens;
  for (const auto& g : I.gens()) gens.push_back(t * map_into(g, ext));
  for (const auto& h : J.gens()) gens.push_back(oneMinusT * map_into(h, ext));
  std::vector<Poly> out;
  for (const auto& g : buchberger(ext, gens, MonomialOrder::elim(1))) {
    if (g.leadTerm().e[0] == 0) out.push_back(map_into(g, r));
  }
  return Ideal(r, std::move(out));
}

std::optional<Poly> exact_divide(const Poly& p, const Poly& f) {
  if (f.isZero()) throw std::invalid_argument("division by the zero polynomial");
  const RingPtr& ring = p.ring();
  Poly q = Poly::zero(ring);
  Poly r = p;
  while (!r.isZero()) {
    const Term& lt = r.leadTerm();
    if (!exps_divides(f.leadTerm().e, lt.e)) return std::nullopt;
    Poly m = Poly::monomial(ring, exps_div(lt.e, f.leadTerm().e),
                            ring->field.div(lt.c, f.leadTerm().c));
    q = q + m;
    r = r - f * m;
  }
  return q;
}

Ideal ideal_quotient(const Ideal& I, const Poly& f) {
  if (!same_ring(f.ring(), I.ring()))
    throw std::invalid_argument("ideal_quotient: ring mismatch");
  if (f.isZero()) throw std::invalid_argument("ideal_quotient by zero");
  if (f.isConstant()) return I;
  Ideal K = ideal_intersect(I, Ideal(I.ring(), {f}));
  std::vector<Poly> out;
  for (const auto& g : K.gens()) {
    auto q = exact_divide(g, f);
    if (!q) throw std::logic_error("quotient generator not divisible");
    out.push_back(std::move(*q));
  }
  return Ideal(I.ring(), std::move(out));
}

Ideal saturate(const Ideal& I, const Poly& f) {
  if (f.isZero()) throw std::invalid_argument("saturation by zero");
  if (f.isConstant()) return I;
  Ideal cur = I;
  for (int iter = 0; iter < 256; ++iter) {
    Ideal nxt = ideal_quotient(cur, f);
    if (ideal_equal(nxt, cur)) return cur;
    cur = nxt;
  }
  throw std::runtime_error("saturation did not stabilize");
}

Ideal elementwise_power(const Ideal& I, unsigned long m, TinyFieldPolicy policy) {
  const RingPtr& ring = I.ring();
  if (m == 0) return Ideal(ring, {Poly::constant(ring, 1)});
  const auto& gens = I.gens();
  size_t s = gens.size();
  if (s == 0) return Ideal(ring, {});
  const FieldSpec& field = ring->field;
  bool tiny = field.isPrime() && field.characteristic() <= m;
  if (tiny && policy == TinyFieldPolicy::Refuse)
    throw std::domain_error(
        "element-wise power over F_" + std::to_string(field.characteristic()) +
        " with p <= m=" + std::to_string(m) +
        ": choose the multinomial-span or exhaustive-scan policy explicitly");
  if (tiny && policy == TinyFieldPolicy::ExhaustiveScan) {
    unsigned long p = field.characteristic();
    double combos = 1;
    for (size_t i = 0; i < s; ++i) combos *= static_cast<double>(p);
    if (combos > 200000)
      throw std::domain_error("exhaustive scan too large: p^s > 200000");
    std::vector<unsigned long> c(s, 0);
    std::vector<Poly> out;
    for (;;) {
      // advance odometer
      size_t pos = 0;
      while (pos < s && ++c[pos] == p) c[pos++] = 0;
      if (pos == s) break;
      Poly lin = Poly::zero(ring);
      for (size_t i = 0; i < s; ++i)
        if (c[i]) lin = lin + gens[i].scaled(mpq_class(c[i]));
      Poly pw = lin.pow(m);
      if (!pw.isZero()) out.push_back(std::move(pw));
    }
    return Ideal(ring, std::move(out));
  }

  // multinomial support formula
  std::vector<std::vector<Poly>> pows(s);
  auto power = [&](size_t i, unsigned long e) {
    auto& tab = pows[i];
    if (tab.empty()) tab.push_back(Poly::constant(ring, 1));
    while (tab.size() <= e) tab.push_back(tab.back() * gens[i]);
    return tab[e];
  };
  std::vector<Poly> out;
  std::vector<unsigned long> e(s, 0);
  auto emit = [&]() {
    if (!multinomial_nonzero(field, m, e)) return;
    Poly prod = Poly::constant(ring, 1);
    for (size_t i = 0; i < s; ++i)
      if (e[i]) prod = prod * power(i, e[i]);
    out.push_back(std::move(prod));
  };
  // enumerate compositions of m into s parts
  std::function<void(size_t, unsigned long)> rec = [&](size_t pos, unsigned long rem) {
    if (pos + 1 == s) {
      e[pos] = rem;
      emit();
      return;
    }
    for (unsigned long v = 0; v <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
  };
  rec(0, m);
  return Ideal(ring, std::move(out));
}

Ideal pure_part(const Ideal& I, std::optional<int> var) {
  const RingPtr& ring = I.ring();
  if (var) {
    if (*var < 0 || *var >= static_cast<int>(ring->vars.size()))
      throw std::invalid_argument("pure_part: variable index out of range");
    return saturate(I, Poly::variable(ring, *var));
  }
  if (I.isZeroIdeal() || ring->vars.empty()) return I;
  std::optional<Ideal> acc;
  for (size_t i = 0; i < ring->vars.size(); ++i) {
    Ideal s = saturate(I, Poly::variable(ring, static_cast<int>(i)));
    acc = acc ? ideal_intersect(*acc, s) : s;
    if (acc->isZeroIdeal()) break;
  }
  return *acc;
}

long count_standard_monomials(const RingPtr& ring, const std::vector<Poly>& basis,
                              long maxdeg) {
  size_t n = ring->vars.size();
  std::vector<Exps> leads;
  for (const auto& g : basis) {
    if (g.isZero()) continue;
    leads.push_back(g.leadTerm().e);
  }
  Exps cur(n, 0);
  // DFS over exponents; prune once the partial monomial is already a
  // multiple of some lead whose support lies in the assigned prefix.
  std::function<long(size_t, long)> rec = [&](size_t v, long degLeft) -> long {
    for (const auto& l : leads) {
      bool dominated = true;
      for (size_t i = 0; i < n; ++i) {
        if (i < v ? cur[i] < l[i] : l[i] > 0) {
          dominated = false;
          break;
        }
      }
      if (dominated) return 0;
    }
    if (v == n) return 1;
    long total = 0;
    for (long e = 0; e <= degLeft; ++e) {
      cur[v] = static_cast<int32_t>(e);
      total += rec(v + 1, degLeft - e);
    }
    cur[v] = 0;
    return total;
  };
  return rec(0, maxdeg);
}

LengthResult length_between(const Ideal& inner, const Ideal& outer) {
  if (!same_ring(inner.ring(), outer.ring()))
    throw std::invalid_argument("length_between: ring mismatch");
  for (const auto& g : inner.gens())
    if (!outer.contains(g))
      throw std::invalid_argument("length_between: inner ideal not contained in outer");
  const RingPtr& ring = inner.ring();
  MonomialOrder grl = MonomialOrder::grevlex();
  const auto& bi = inner.groebner(grl);
  const auto& bo = outer.groebner(grl);
  long d0 = 4;
  for (const auto& g : bi) d0 = std::max(d0, 2 * g.totalDegree());
  for (const auto& g : bo) d0 = std::max(d0, 2 * g.totalDegree());
  long d = d0;
  LengthResult res;
  while (d <= 96) {
    long c0 = count_standard_monomials(ring, bi, d) -
              count_standard_monomials(ring, bo, d);
    long c1 = count_standard_monomials(ring, bi, d + 1) -
              count_standard_monomials(ring, bo, d + 1);
    long c2 = count_standard_monomials(ring, bi, d + 2) -
              count_standard_monomials(ring, bo, d + 2);
    if (c0 == c1 && c1 == c2) {
      res.stabilized = true;
      res.length = c0;
      res.truncationDegree = d;
      return res;
    }
    d *= 2;
  }
  res.stabilized = false;
  res.truncationDegree = d;
  return res;
}

TorsionResult torsion_length(const Ideal& I) {
  TorsionResult r;
  r.pure = pure_part(I);
  r.len = length_between(I, r.pure);
  return r;
}

}  // namespace kflat
