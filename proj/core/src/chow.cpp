#include "kflat/chow.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace kflat {

ProjectionSpec ProjectionSpec::linearFromPoint(std::vector<mpq_class> a) {
  ProjectionSpec s;
  s.kind = Kind::LinearFromPoint;
  s.center = std::move(a);
  return s;
}

ProjectionSpec ProjectionSpec::linearToSubspace(std::vector<Poly> ells) {
  ProjectionSpec s;
  s.kind = Kind::LinearToSubspace;
  s.forms = std::move(ells);
  return s;
}

ProjectionSpec ProjectionSpec::affineNonlinear(std::vector<Poly> phis) {
  ProjectionSpec s;
  s.kind = Kind::AffineNonlinear;
  s.forms = std::move(phis);
  return s;
}

Poly apply_projection(const Poly& p, const ProjectionSpec& spec) {
  const RingPtr& R = p.ring();
  if (!R) throw std::invalid_argument("apply_projection: detached polynomial");
  const int n = static_cast<int>(R->vars.size());
  std::vector<Poly> images;
  images.reserve(n);

  switch (spec.kind) {
    case ProjectionSpec::Kind::LinearFromPoint: {
      if (static_cast<int>(spec.center.size()) != n - 1)
        throw std::invalid_argument("apply_projection: dimension mismatch");
      Poly last = Poly::variable(R, n - 1);
      for (int i = 0; i + 1 < n; ++i)
        images.push_back(Poly::variable(R, i) - last.scaled(spec.center[i]));
      images.push_back(last);
      break;
    }
    case ProjectionSpec::Kind::LinearToSubspace: {
      const int k = static_cast<int>(spec.forms.size());
      if (k > n) throw std::invalid_argument("apply_projection: dimension mismatch");
      for (const Poly& ell : spec.forms) {
        if (!same_ring(ell.ring(), R))
          throw std::invalid_argument("apply_projection: form in a different ring");
        if (ell.totalDegree() > 1)
          throw std::invalid_argument("apply_projection: form is not linear");
        for (int j = 0; j < k; ++j)
          if (ell.degreeIn(j) > 0)
            throw std::invalid_argument(
                "apply_projection: form involves a projected variable");
      }
      for (int i = 0; i < n; ++i) {
        Poly xi = Poly::variable(R, i);
        images.push_back(i < k ? xi - spec.forms[i] : xi);
      }
      break;
    }
    case ProjectionSpec::Kind::AffineNonlinear: {
      const int k = static_cast<int>(spec.forms.size());
      if (k > n) throw std::invalid_argument("apply_projection: dimension mismatch");
      std::vector<Poly> zeroTail;
      zeroTail.reserve(n);
      for (int j = 0; j < n; ++j)
        zeroTail.push_back(j < k ? Poly::variable(R, j) : Poly::zero(R));
      for (const Poly& phi : spec.forms) {
        if (!same_ring(phi.ring(), R))
          throw std::invalid_argument("apply_projection: form in a different ring");
        if (!phi.substitute(zeroTail).isZero())
          throw std::invalid_argument(
              "apply_projection: form does not vanish along the target subspace");
      }
      for (int i = 0; i < n; ++i) {
        Poly xi = Poly::variable(R, i);
        images.push_back(i < k ? xi - spec.forms[i] : xi);
      }
      break;
    }
  }
  return p.substitute(images);
}

Poly affine_projection_coordinate(const Poly& xi, const Poly& ell0,
                                  const Poly& elli, int truncDegree) {
  if (truncDegree < 1)
    throw std::invalid_argument("affine_projection_coordinate: empty truncation");
  const RingPtr& R = xi.ring();
  if (!same_ring(ell0.ring(), R) || !same_ring(elli.ring(), R))
    throw std::invalid_argument("affine_projection_coordinate: mixed rings");
  Poly series = Poly::constant(R, 1);
  Poly power = Poly::constant(R, 1);
  for (int k = 1; k < truncDegree; ++k) {
    power *= ell0;
    series += power;
  }
  return (xi - elli) * series;
}

namespace {

// Distinct partial derivatives of each exact order 1..m, keyed by
// differentiation multi-index to skip the symmetric repeats.
std::vector<std::vector<Poly>> partials_by_order(const Poly& f, int m, int nvars) {
  std::vector<std::vector<Poly>> out;
  std::map<Exps, Poly> level;
  level[Exps(nvars, 0)] = f;
  for (int k = 1; k <= m; ++k) {
    std::map<Exps, Poly> next;
    for (const auto& [alpha, p] : level) {
      for (int v = 0; v < nvars; ++v) {
        Exps beta = alpha;
        ++beta[v];
        if (next.count(beta)) continue;
        next[beta] = p.derivative(v);
      }
    }
    std::vector<Poly> distinct;
    for (const auto& [beta, p] : next) {
      if (p.isZero()) continue;
      bool dup = false;
      for (const Poly& q : distinct)
        if (q == p) {
          dup = true;
          break;
        }
      if (!dup) distinct.push_back(p);
    }
    out.push_back(std::move(distinct));
    level = std::move(next);
  }
  return out;
}

}  // namespace

Ideal derivative_ideal(const Poly& f, int m) {
  if (f.isZero()) throw std::invalid_argument("derivative_ideal: zero polynomial");
  if (m < 0) throw std::invalid_argument("derivative_ideal: negative order");
  const RingPtr& R = f.ring();
  const int nvars = static_cast<int>(R->vars.size());
  std::vector<Poly> gens{f};
  for (auto& lvl : partials_by_order(f, m, nvars))
    for (Poly& p : lvl) {
      bool dup = false;
      for (const Poly& q : gens)
        if (q == p) {
          dup = true;
          break;
        }
      if (!dup) gens.push_back(std::move(p));
    }
  return Ideal(R, gens);
}

Ideal chow_ideal_hypersurface_pair(const Poly& f, const std::string& zname,
                                   std::optional<int> mOpt) {
  if (f.isZero())
    throw std::invalid_argument("chow_ideal_hypersurface_pair: zero polynomial");
  const RingPtr& R = f.ring();
  if (!R->field.isRationals())
    throw std::domain_error("chow_ideal_hypersurface_pair: characteristic 0 only");
  for (const std::string& v : R->vars)
    if (v == zname)
      throw std::invalid_argument("chow_ideal_hypersurface_pair: variable name clash");

  const int m = mOpt ? *mOpt
                     : static_cast<int>(f.isHomogeneous() ? f.totalDegree()
                                                          : f.lowDegree());
  if (m < 0) throw std::invalid_argument("chow_ideal_hypersurface_pair: bad order");

  std::vector<std::string> vars = R->vars;
  vars.push_back(zname);
  RingPtr ext = make_ring(R->field, vars, R->order);

  Poly fe = map_into(f, ext);
  Poly z = Poly::variable(ext, zname);
  std::vector<Poly> gens{fe};
  const int nvars = static_cast<int>(R->vars.size());
  auto levels = partials_by_order(fe, m, nvars);
  for (int k = 1; k <= m; ++k) {
    Poly zk = z.pow(static_cast<unsigned long>(k));
    for (const Poly& p : levels[k - 1]) gens.push_back(zk * p);
  }
  return Ideal(ext, gens);
}

namespace {

void degree_n_exps(int nvars, int pos, int remaining, Exps& cur,
                   std::vector<Exps>& out) {
  if (pos == nvars - 1) {
    cur[pos] = remaining;
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[pos] = e;
    degree_n_exps(nvars, pos + 1, remaining - e, cur, out);
  }
}

}  // namespace

Ideal chow_ideal_axes(int n) {
  if (n < 1) throw std::invalid_argument("chow_ideal_axes: need n >= 1");
  std::vector<std::string> vars;
  vars.reserve(n);
  for (int i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
  RingPtr R = make_ring(FieldSpec::rationals(), vars);

  std::vector<Exps> all;
  Exps cur(n, 0);
  degree_n_exps(n, 0, n, cur, all);

  std::vector<Poly> gens;
  for (const Exps& e : all) {
    bool pure = false;
    for (int i = 0; i < n; ++i)
      if (e[i] == n) pure = true;
    if (pure) continue;
    if (n % 2 == 1) {
      bool allOnes = true;
      for (int i = 0; i < n; ++i)
        if (e[i] != 1) allOnes = false;
      if (allOnes) continue;
    }
    gens.push_back(Poly::monomial(R, e, 1));
  }
  return Ideal(R, gens);
}

Poly axes_projection_pullback(const RingPtr& ring, const std::vector<mpq_class>& a,
                              const std::vector<mpq_class>& b) {
  const int n = static_cast<int>(ring->vars.size());
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("axes_projection_pullback: dimension mismatch");
  Poly out = Poly::constant(ring, 1);
  for (int j = 0; j < n; ++j) {
    Poly L = Poly::zero(ring);
    for (int i = 0; i < n; ++i) {
      mpq_class c = a[i] * b[j] - a[j] * b[i];
      if (c == 0) continue;
      L += Poly::variable(ring, i).scaled(c);
    }
    out *= L;
  }
  return out;
}

std::optional<std::vector<int>> find_weight_subset(const std::vector<long>& w) {
  const int n = static_cast<int>(w.size());
  if (n > 24) throw std::invalid_argument("find_weight_subset: too many weights");
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    long sum = 0;
    int cnt = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum += w[i];
        ++cnt;
      }
    if (cnt == 0) continue;
    if (sum == n - cnt) {
      std::vector<int> idx;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) idx.push_back(i);
      return idx;
    }
  }
  return std::nullopt;
}

Ideal chow_hull(const std::vector<CycleComponent>& cycle, TinyFieldPolicy policy) {
  if (cycle.empty()) throw std::invalid_argument("chow_hull: empty cycle");
  const RingPtr& R = cycle.front().ideal.ring();
  Ideal acc;
  bool first = true;
  for (const CycleComponent& comp : cycle) {
    if (!same_ring(comp.ideal.ring(), R))
      throw std::invalid_argument("chow_hull: mixed rings");
    if (comp.multiplicity < 1)
      throw std::invalid_argument("chow_hull: nonpositive multiplicity");
    Ideal powered = elementwise_power(
        comp.ideal, static_cast<unsigned long>(comp.multiplicity), policy);
    acc = first ? powered : ideal_intersect(acc, powered);
    first = false;
  }
  return pure_part(acc);
}

namespace {

struct SampleContext {
  RingPtr R;    // cycle ring
  RingPtr PR;   // parameter ring k[t]
  RingPtr ER;   // elimination ring k[t, u, v]
  RingPtr IR;   // image ring k[u, v]
};

std::optional<Poly> draw_equation(const std::vector<CycleComponent>& cycle,
                                  const SampleContext& ctx,
                                  const std::vector<mpq_class>& a,
                                  const std::vector<mpq_class>& b) {
  const int n = static_cast<int>(ctx.R->vars.size());
  Poly A = Poly::zero(ctx.R);
  Poly B = Poly::zero(ctx.R);
  for (int i = 0; i < n; ++i) {
    A += Poly::variable(ctx.R, i).scaled(a[i]);
    B += Poly::variable(ctx.R, i).scaled(b[i]);
  }

  Poly F = Poly::constant(ctx.R, 1);
  for (const CycleComponent& comp : cycle) {
    Poly ut = Poly::zero(ctx.PR);
    Poly vt = Poly::zero(ctx.PR);
    for (int i = 0; i < n; ++i) {
      ut += comp.param[i].scaled(a[i]);
      vt += comp.param[i].scaled(b[i]);
    }
    const long dmax = std::max(ut.totalDegree(), vt.totalDegree());
    if (dmax < 1) return std::nullopt;  // projection collapses the component

    Poly g1 = Poly::variable(ctx.ER, 1) - map_into(ut, ctx.ER);
    Poly g2 = Poly::variable(ctx.ER, 2) - map_into(vt, ctx.ER);
    auto gb = buchberger(ctx.ER, {g1, g2}, MonomialOrder::elim(1));
    std::vector<Poly> elim;
    for (const Poly& p : gb)
      if (p.degreeIn(0) <= 0) elim.push_back(map_into(p, ctx.IR));
    if (elim.empty()) return std::nullopt;
    Ideal img(ctx.IR, elim);
    const std::vector<Poly>& igb = img.groebner();
    if (igb.size() != 1) return std::nullopt;
    const Poly& g = igb.front();
    if (g.totalDegree() != dmax) return std::nullopt;  // multiple cover of the image

    Poly gsub = Poly::zero(ctx.R);
    for (const Term& t : g.terms()) {
      Poly mono = Poly::constant(ctx.R, t.c);
      mono *= A.pow(static_cast<unsigned long>(t.e[0]));
      mono *= B.pow(static_cast<unsigned long>(t.e[1]));
      gsub += mono;
    }
    if (gsub.isZero() || gsub.isConstant()) return std::nullopt;
    F *= gsub.pow(static_cast<unsigned long>(comp.multiplicity));
  }
  return F;
}

}  // namespace

ChowSampleResult sample_chow_ideal(const std::vector<CycleComponent>& cycle,
                                   std::uint64_t seed, int batch, int maxDraws) {
  if (cycle.empty()) throw std::invalid_argument("sample_chow_ideal: empty cycle");
  if (batch < 1 || maxDraws < 1)
    throw std::invalid_argument("sample_chow_ideal: bad draw budget");
  SampleContext ctx;
  ctx.R = cycle.front().ideal.ring();
  const int n = static_cast<int>(ctx.R->vars.size());
  for (const CycleComponent& comp : cycle) {
    if (!same_ring(comp.ideal.ring(), ctx.R))
      throw std::invalid_argument("sample_chow_ideal: mixed rings");
    if (static_cast<int>(comp.param.size()) != n)
      throw std::invalid_argument("sample_chow_ideal: parametrization arity mismatch");
    if (comp.multiplicity < 1)
      throw std::invalid_argument("sample_chow_ideal: nonpositive multiplicity");
  }
  ctx.PR = cycle.front().param.front().ring();
  if (ctx.PR->vars.size() != 1)
    throw std::invalid_argument("sample_chow_ideal: parametrization must be univariate");
  for (const CycleComponent& comp : cycle)
    for (const Poly& p : comp.param)
      if (!same_ring(p.ring(), ctx.PR))
        throw std::invalid_argument("sample_chow_ideal: mixed parameter rings");

  const std::string& tname = ctx.PR->vars[0];
  std::string un = "u", vn = "v";
  for (int s = 0; un == tname || vn == tname; ++s) {
    un = "u" + std::to_string(s);
    vn = "v" + std::to_string(s);
  }
  ctx.ER = make_ring(ctx.R->field, {tname, un, vn});
  ctx.IR = make_ring(ctx.R->field, {un, vn});

  std::mt19937_64 gen(seed);
  auto coord = [&gen]() {
    return mpq_class(static_cast<long>(gen() % 15) - 7);
  };

  std::vector<Poly> acc;
  Ideal cur(ctx.R, {});
  int unchangedBatches = 0;
  ChowSampleResult res;

  // While every accepted equation stays homogeneous of one common degree,
  // membership of a same-degree candidate is span membership, so batches can
  // be deduplicated by row reduction instead of Groebner bases.
  bool spanMode = true;
  long spanDeg = -1;
  std::vector<Poly> rows;  // monic, pairwise distinct lead monomials
  auto spanReduce = [&](Poly f) {
    bool again = true;
    while (again && !f.isZero()) {
      again = false;
      const Term lt = f.leadTerm();
      for (const Poly& r : rows) {
        if (r.leadTerm().e == lt.e) {
          f = f - r.scaled(lt.c);
          again = true;
          break;
        }
      }
    }
    return f;
  };

  while (res.draws < maxDraws && !res.stabilized) {
    bool changed = false;
    for (int bi = 0; bi < batch && res.draws < maxDraws; ++bi) {
      ++res.draws;
      std::vector<mpq_class> a(n), b(n);
      for (int i = 0; i < n; ++i) a[i] = coord();
      for (int i = 0; i < n; ++i) b[i] = coord();
      std::optional<Poly> F = draw_equation(cycle, ctx, a, b);
      if (!F) continue;
      if (spanMode) {
        const long d = F->totalDegree();
        if (F->isHomogeneous() && (spanDeg < 0 || d == spanDeg)) {
          Poly rem = spanReduce(*F);
          if (!rem.isZero()) {
            spanDeg = d;
            rows.push_back(rem.monic());
            changed = true;
          }
          continue;
        }
        spanMode = false;
        acc = rows;  // generates the same ideal
        cur = Ideal(ctx.R, acc);
      }
      if (!cur.contains(*F)) {
        acc.push_back(*F);
        changed = true;
      }
    }
    if (changed) {
      if (!spanMode) {
        cur = Ideal(ctx.R, acc);
        acc = cur.groebner();  // same ideal, smaller generating set
      }
      unchangedBatches = 0;
    } else if ((!acc.empty() || !rows.empty()) && ++unchangedBatches >= 2) {
      res.stabilized = true;
    }
  }
  if (spanMode) cur = Ideal(ctx.R, rows);
  res.ideal = Ideal(ctx.R, cur.groebner());
  return res;
}

}  // namespace kflat
