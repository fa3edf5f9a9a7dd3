#include "kflat/cn_deform.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "kflat/parse.hpp"

namespace kflat {

namespace {

RingPtr scalar_ring(const FieldSpec& field) { return make_ring(field, {}); }

std::string axis_name(int j) { return "x" + std::to_string(j); }

mpq_class scalar_pow(const FieldSpec& F, const mpq_class& base, long e) {
  mpq_class b = e < 0 ? F.inv(base) : F.norm(base);
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  mpq_class r = F.fromLong(1);
  while (k) {
    if (k & 1) r = F.mul(r, b);
    b = F.mul(b, b);
    k >>= 1;
  }
  return r;
}

// Reduced row echelon form over the field; returns pivot column per row.
std::vector<int> rref(const FieldSpec& F, std::vector<std::vector<mpq_class>>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    mpq_class inv = F.inv(rows[r][col]);
    for (size_t c = col; c < ncols; ++c) rows[r][c] = F.mul(rows[r][c], inv);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      mpq_class factor = rows[i][col];
      for (size_t c = col; c < ncols; ++c)
        rows[i][c] = F.sub(rows[i][c], F.mul(factor, rows[r][c]));
    }
    pivots.push_back(static_cast<int>(col));
    ++r;
  }
  rows.resize(pivots.size());
  return pivots;
}

int row_rank(const FieldSpec& F, std::vector<std::vector<mpq_class>> rows) {
  return static_cast<int>(rref(F, rows).size());
}

std::vector<std::vector<mpq_class>> kernel_basis(
    const FieldSpec& F, std::vector<std::vector<mpq_class>> rows, size_t ncols) {
  std::vector<int> pivots = rref(F, rows);
  std::vector<bool> isPivot(ncols, false);
  for (int c : pivots) isPivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (size_t free = 0; free < ncols; ++free) {
    if (isPivot[free]) continue;
    std::vector<mpq_class> v(ncols, 0);
    v[free] = F.fromLong(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = F.neg(rows[r][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

void check_indices(const CnDeformation& d, int i, int j) {
  if (i < 1 || i > d.m || j < 1 || j > d.n || i == j)
    throw std::invalid_argument("bad deformation entry indices");
}

}  // namespace

CnDeformation make_cn(int n, int m, const FieldSpec& field) {
  if (n < 2) throw std::invalid_argument("make_cn: need at least two axes");
  if (m < n) throw std::invalid_argument("make_cn: ambient dimension below n");
  CnDeformation d;
  d.n = n;
  d.m = m;
  d.field = field;
  return d;
}

void cn_set(CnDeformation& d, int i, int j, const LaurentPoly& value) {
  check_indices(d, i, j);
  if (value.isZero()) {
    d.phi.erase({i, j});
    return;
  }
  const RingPtr& B = value.base();
  if (!B->vars.empty() || B->field != d.field)
    throw std::invalid_argument("cn_set: entry must be scalar-coefficient Laurent");
  if (value.lvar() != axis_name(j))
    throw std::invalid_argument("cn_set: entry must be a Laurent polynomial in " +
                                axis_name(j));
  d.phi[{i, j}] = value;
}

const LaurentPoly* cn_get(const CnDeformation& d, int i, int j) {
  check_indices(d, i, j);
  auto it = d.phi.find({i, j});
  return it == d.phi.end() ? nullptr : &it->second;
}

int cn_pole_order(const CnDeformation& d, int i, int j) {
  const LaurentPoly* p = cn_get(d, i, j);
  return p ? p->poleOrder() : 0;
}

mpq_class cn_residue(const CnDeformation& d, int i, int j) {
  const LaurentPoly* p = cn_get(d, i, j);
  if (!p) return 0;
  Poly r = p->residue();
  return r.isZero() ? mpq_class(0) : r.constantValue();
}

int cn_max_pole_order(const CnDeformation& d) {
  int out = 0;
  for (const auto& [ij, p] : d.phi) out = std::max(out, p.poleOrder());
  return out;
}

CnDeformation cn_normalize(const CnDeformation& d) {
  CnDeformation out = make_cn(d.n, d.m, d.field);
  for (const auto& [ij, p] : d.phi) {
    LaurentPoly q = p.nonpositivePart();
    if (!q.isZero()) out.phi[ij] = q;
  }
  return out;
}

bool cn_is_normalized(const CnDeformation& d) {
  for (const auto& [ij, p] : d.phi)
    if (p.topExp() > 0) return false;
  return true;
}

bool cn_is_flat(const CnDeformation& d) {
  if (d.n >= 3) return cn_max_pole_order(d) == 0;
  // two axes: simple poles with matching residues, regular ambient rows
  if (cn_pole_order(d, 1, 2) > 1 || cn_pole_order(d, 2, 1) > 1) return false;
  if (cn_residue(d, 1, 2) != cn_residue(d, 2, 1)) return false;
  for (const auto& [ij, p] : d.phi)
    if (ij.first > 2 && p.poleOrder() > 0) return false;
  return true;
}

bool cn_is_kflat(const CnDeformation& d) {
  if (cn_max_pole_order(d) > 1) return false;
  for (int i = 1; i <= d.m; ++i)
    for (int j = i + 1; j <= d.m; ++j) {
      mpq_class cij = j <= d.n ? cn_residue(d, i, j) : mpq_class(0);
      mpq_class cji = i <= d.n ? cn_residue(d, j, i) : mpq_class(0);
      if (cij != cji) return false;
    }
  return true;
}

bool cn_chow_vanishing(const CnDeformation& d) {
  if (d.n < 3)
    throw std::invalid_argument("cn_chow_vanishing: defined for three or more axes");
  return cn_max_pole_order(d) <= d.n - 2;
}

CnDeformation cn_lambda_rescale(const CnDeformation& d,
                                const std::vector<mpq_class>& lambda) {
  if (static_cast<int>(lambda.size()) != d.m)
    throw std::invalid_argument("cn_lambda_rescale: need one factor per coordinate");
  const FieldSpec& F = d.field;
  for (const mpq_class& l : lambda)
    if (F.norm(l) == 0)
      throw std::invalid_argument("cn_lambda_rescale: zero factor");

  CnDeformation out = make_cn(d.n, d.m, d.field);
  for (const auto& [ij, p] : d.phi) {
    const auto [i, j] = ij;
    const mpq_class& li = lambda[i - 1];
    const mpq_class& lj = lambda[j - 1];
    LaurentPoly q = LaurentPoly::zero(p.base(), p.lvar());
    for (const auto& [k, coef] : p.coeffs()) {
      mpq_class factor = F.mul(F.norm(li), scalar_pow(F, lj, -static_cast<long>(k)));
      q = q + LaurentPoly::term(p.base(), p.lvar(), k, coef.scaled(factor));
    }
    if (!q.isZero()) out.phi[ij] = q;
  }
  return out;
}

CnProjection cn_projection_equation(const CnDeformation& d,
                                    const std::vector<mpq_class>& abar,
                                    const std::vector<mpq_class>& aprime) {
  if (static_cast<int>(abar.size()) != d.m ||
      static_cast<int>(aprime.size()) != d.m)
    throw std::invalid_argument("cn_projection_equation: need one weight per coordinate");
  const FieldSpec& F = d.field;
  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j)
      if (F.norm(abar[i - 1]) == F.norm(abar[j - 1]))
        throw std::invalid_argument("cn_projection_equation: slopes must be distinct");

  RingPtr BR = make_ring(F, {"v"});
  const std::string un = "u";
  Poly v = Poly::variable(BR, 0);

  DualLaurent eq(LaurentPoly::constant(BR, un, 1), LaurentPoly::zero(BR, un));
  for (int j = 1; j <= d.n; ++j) {
    LaurentPoly body = LaurentPoly::fromPoly(v, un) +
                       LaurentPoly::term(BR, un, 1, Poly::constant(BR, F.neg(abar[j - 1])));
    LaurentPoly epart =
        LaurentPoly::term(BR, un, 1, Poly::constant(BR, F.norm(aprime[j - 1])));
    for (int i = 1; i <= d.m; ++i) {
      if (i == j) continue;
      const LaurentPoly* phi = d.phi.count({i, j}) ? &d.phi.at({i, j}) : nullptr;
      if (!phi) continue;
      mpq_class w = F.sub(abar[i - 1], abar[j - 1]);
      if (w == 0) continue;
      for (const auto& [k, coef] : phi->coeffs())
        epart = epart + LaurentPoly::term(BR, un, k,
                                          Poly::constant(BR, F.mul(w, coef.constantValue())));
    }
    eq = eq * DualLaurent(body, -epart);
  }
  CnProjection out;
  out.base = eq.body;
  out.B = -eq.eps;
  return out;
}

namespace {

std::vector<mpq_class> draw_distinct(std::mt19937_64& gen, int count,
                                     const FieldSpec& F) {
  const long spread = std::max(12L, static_cast<long>(count));
  std::vector<long> pool;
  for (long v = -spread; v <= spread; ++v) pool.push_back(v);
  std::vector<mpq_class> out;
  std::set<mpq_class> seen;
  while (static_cast<int>(out.size()) < count) {
    if (pool.empty())
      throw std::invalid_argument("draw_distinct: field too small");
    size_t idx = static_cast<size_t>(gen() % pool.size());
    mpq_class v = F.fromLong(pool[idx]);
    pool.erase(pool.begin() + static_cast<long>(idx));
    if (seen.count(v)) continue;
    seen.insert(v);
    out.push_back(v);
  }
  return out;
}

std::vector<mpq_class> draw_ints(std::mt19937_64& gen, int count) {
  std::vector<mpq_class> out;
  for (int k = 0; k < count; ++k)
    out.push_back(mpq_class(static_cast<long>(gen() % 15) - 7));
  return out;
}

std::vector<mpq_class> draw_nonzero(std::mt19937_64& gen, int count) {
  std::vector<mpq_class> out;
  for (int k = 0; k < count; ++k) {
    long v = static_cast<long>(gen() % 9) - 4;
    if (v == 0) v = 5;
    out.push_back(mpq_class(v));
  }
  return out;
}

std::string polar_term_str(const LaurentPoly& B) {
  const int k = B.ord();
  return "(" + B.coeff(k).str() + ")*" + B.lvar() + "^" + std::to_string(k);
}

}  // namespace

CnRefutation cn_refute_by_projection(const CnDeformation& d, std::uint64_t seed,
                                     int plainDraws, int lambdaDraws) {
  CnRefutation res;
  std::mt19937_64 gen(seed);
  const bool primeField = d.field.isPrime();
  const unsigned long p = d.field.characteristic();
  if (primeField && p <= static_cast<unsigned long>(2 * d.m))
    throw std::invalid_argument("cn_refute_by_projection: field too small for distinct slopes");

  auto attempt = [&](const CnDeformation& target,
                     const std::vector<mpq_class>& lambda) -> bool {
    ++res.draws;
    std::vector<mpq_class> abar = draw_distinct(gen, target.m, d.field);
    std::vector<mpq_class> aprime = draw_ints(gen, target.m);
    CnProjection proj = cn_projection_equation(target, abar, aprime);
    if (proj.B.poleOrder() == 0) return false;
    res.refuted = true;
    res.abar = abar;
    res.aprime = aprime;
    res.lambda = lambda;
    res.polarTerm = polar_term_str(proj.B);
    return true;
  };

  for (int k = 0; k < plainDraws; ++k)
    if (attempt(d, {})) return res;
  for (int k = 0; k < lambdaDraws; ++k) {
    std::vector<mpq_class> lambda = draw_nonzero(gen, d.m);
    if (attempt(cn_lambda_rescale(d, lambda), lambda)) return res;
  }
  return res;
}

Ideal cn_central_fiber_ideal(const CnDeformation& d) {
  if (d.m != d.n)
    throw std::invalid_argument("cn_central_fiber_ideal: ambient coordinates present");
  if (cn_max_pole_order(d) > 1)
    throw std::invalid_argument("cn_central_fiber_ideal: poles must be simple");
  const int n = d.n;
  const FieldSpec& F = d.field;

  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(axis_name(i));
  RingPtr R = make_ring(F, vars);

  // unordered pair {i, j} -> column
  std::map<std::pair<int, int>, int> col;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      col[{i, j}] = static_cast<int>(pairs.size());
      pairs.push_back({i, j});
    }
  auto colOf = [&](int i, int j) { return col.at({std::min(i, j), std::max(i, j)}); };

  // s_1(gamma) - s_l(gamma) = 0 for l = 2..n, where
  // s_l = sum_{i != l} gamma_{il} c_{il}.
  std::vector<std::vector<mpq_class>> rows;
  for (int l = 2; l <= n; ++l) {
    std::vector<mpq_class> row(pairs.size(), 0);
    for (int i = 2; i <= n; ++i)
      row[colOf(i, 1)] = F.add(row[colOf(i, 1)], cn_residue(d, i, 1));
    for (int i = 1; i <= n; ++i) {
      if (i == l) continue;
      row[colOf(i, l)] = F.sub(row[colOf(i, l)], cn_residue(d, i, l));
    }
    rows.push_back(std::move(row));
  }

  std::vector<Poly> gens;
  for (const auto& gamma : kernel_basis(F, rows, pairs.size())) {
    Poly q = Poly::zero(R);
    for (size_t k = 0; k < pairs.size(); ++k) {
      if (gamma[k] == 0) continue;
      Exps e(n, 0);
      e[pairs[k].first - 1] = 1;
      e[pairs[k].second - 1] = 1;
      q += Poly::monomial(R, e, gamma[k]);
    }
    if (!q.isZero()) gens.push_back(q);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      Exps e(n, 0);
      e[i - 1] = 2;
      e[j - 1] = 1;
      gens.push_back(Poly::monomial(R, e, 1));
    }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Exps e(n, 0);
        e[i - 1] = e[j - 1] = e[k - 1] = 1;
        gens.push_back(Poly::monomial(R, e, 1));
      }
  return Ideal(R, gens);
}

CnSmoothing cn_smoothing(const FieldSpec& field, const std::vector<mpq_class>& p,
                         const std::vector<mpq_class>& lambda) {
  const int n = static_cast<int>(p.size());
  if (n < 2 || lambda.size() != p.size())
    throw std::invalid_argument("cn_smoothing: need matching pole and weight lists");
  for (int i = 0; i < n; ++i) {
    if (field.norm(lambda[i]) == 0)
      throw std::invalid_argument("cn_smoothing: zero weight");
    for (int j = i + 1; j < n; ++j)
      if (field.norm(p[i]) == field.norm(p[j]))
        throw std::invalid_argument("cn_smoothing: poles must be distinct");
  }

  CnSmoothing out;
  std::vector<std::string> vars;
  for (int i = 1; i <= n; ++i) vars.push_back(axis_name(i));
  vars.push_back("t");
  out.ring = make_ring(field, vars);
  Poly t = Poly::variable(out.ring, n);

  out.e.assign(n, std::vector<mpq_class>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      out.e[i][j] = field.div(lambda[i], field.sub(p[i], p[j]));
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Poly xi = Poly::variable(out.ring, i);
      Poly xj = Poly::variable(out.ring, j);
      Poly eq = (xi * xj).scaled(field.sub(p[i], p[j])) +
                (xi.scaled(lambda[j]) - xj.scaled(lambda[i])) * t;
      out.equations.push_back(eq);
    }
  return out;
}

CnDeformation cn_smoothing_first_order(const FieldSpec& field,
                                       const std::vector<mpq_class>& p,
                                       const std::vector<mpq_class>& lambda) {
  CnSmoothing s = cn_smoothing(field, p, lambda);
  const int n = static_cast<int>(p.size());
  CnDeformation d = make_cn(n, n, field);
  RingPtr SR = scalar_ring(field);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      cn_set(d, i, j,
             LaurentPoly::constant(SR, axis_name(j), s.e[i - 1][j - 1]));
    }
  return d;
}

CnSpanRank cn_smoothing_span_rank(
    const FieldSpec& field,
    const std::vector<std::pair<std::vector<mpq_class>, std::vector<mpq_class>>>& samples,
    int n) {
  if (n < 2) throw std::invalid_argument("cn_smoothing_span_rank: need n >= 2");
  const size_t dim = static_cast<size_t>(n) * (n - 1);
  auto coord = [&](int i, int j) {
    return static_cast<size_t>(i) * (n - 1) + static_cast<size_t>(j > i ? j - 1 : j);
  };

  std::vector<std::vector<mpq_class>> vecs;
  for (const auto& [p, lambda] : samples) {
    if (static_cast<int>(p.size()) != n)
      throw std::invalid_argument("cn_smoothing_span_rank: sample arity mismatch");
    CnSmoothing s = cn_smoothing(field, p, lambda);
    std::vector<mpq_class> v(dim, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) v[coord(i, j)] = s.e[i][j];
    vecs.push_back(std::move(v));
  }

  CnSpanRank out;
  out.raw = row_rank(field, vecs);

  for (int i = 0; i < n; ++i) {
    std::vector<mpq_class> T(dim, 0);
    for (int j = 0; j < n; ++j)
      if (j != i) T[coord(i, j)] = field.fromLong(1);
    vecs.push_back(std::move(T));
  }
  out.moduloTranslations = row_rank(field, vecs) - n;
  return out;
}

std::string cn_str(const CnDeformation& d) {
  std::string out;
  for (const auto& [ij, p] : d.phi) {
    out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " +
           p.str() + "\n";
  }
  return out;
}

CnDeformation cn_parse(const std::string& text, int n, int m, const FieldSpec& field) {
  CnDeformation d = make_cn(n, m, field);
  RingPtr SR = scalar_ring(field);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    int i = 0, j = 0;
    if (!(ls >> i >> j))
      throw std::invalid_argument("cn_parse: malformed line: " + line);
    std::string rest;
    std::getline(ls, rest);
    if (rest.find_first_not_of(" \t\r") == std::string::npos)
      throw std::invalid_argument("cn_parse: missing expression: " + line);
    cn_set(d, i, j, parse_laurent(rest, SR, axis_name(j)));
  }
  return d;
}

}  // namespace kflat
