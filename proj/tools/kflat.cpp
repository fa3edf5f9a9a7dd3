// kflat: command line front end for the exact-arithmetic library.
//
// Exit codes: 0 = success / "yes"; 1 = mathematical "no" from a check
// command; 2 = usage, parse, or input errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kflat/chow.hpp"
#include "kflat/cn_deform.hpp"
#include "kflat/dsupp.hpp"
#include "kflat/field.hpp"
#include "kflat/groebner.hpp"
#include "kflat/laurent.hpp"
#include "kflat/parse.hpp"
#include "kflat/plane_deform.hpp"
#include "kflat/poly.hpp"
#include "kflat/semigroup.hpp"

using namespace kflat;
using ojson = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
  std::string field = "Q";
  std::string vars = "x,y";
  std::string laurent;
  std::string order = "grevlex";
  std::uint64_t seed = 0;
  bool json = false;
};

void add_globals(CLI::App* sub, GlobalOpts& g) {
  sub->add_option("--field", g.field, "Coefficient field: Q or Fp:<prime>");
  sub->add_option("--vars", g.vars, "Comma-separated ring variables");
  sub->add_option("--laurent", g.laurent, "Laurent variable name (matrix entries)");
  sub->add_option("--order", g.order, "Monomial order: lex, grevlex, elim:<k>");
  sub->add_option("--seed", g.seed, "Seed for randomized commands");
  sub->add_flag("--json", g.json, "Machine-readable one-line JSON output");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (std::string& part : out) {
    size_t b = part.find_first_not_of(" \t");
    size_t e = part.find_last_not_of(" \t");
    part = (b == std::string::npos) ? "" : part.substr(b, e - b + 1);
  }
  return out;
}

FieldSpec parse_field(const std::string& s) {
  if (s == "Q") return FieldSpec::rationals();
  if (s.rfind("Fp:", 0) == 0) return FieldSpec::prime(std::stol(s.substr(3)));
  throw std::invalid_argument("unknown field '" + s + "' (expected Q or Fp:<prime>)");
}

MonomialOrder parse_order(const std::string& s) {
  if (s == "lex") return MonomialOrder::lex();
  if (s == "grevlex") return MonomialOrder::grevlex();
  if (s.rfind("elim:", 0) == 0) return MonomialOrder::elim(std::stoi(s.substr(5)));
  throw std::invalid_argument("unknown order '" + s + "'");
}

RingPtr ring_from(const GlobalOpts& g) {
  std::vector<std::string> names = split(g.vars, ',');
  return make_ring(parse_field(g.field), names, parse_order(g.order));
}

std::vector<Poly> parse_gens(const std::string& src, const RingPtr& r) {
  std::vector<Poly> out;
  for (const std::string& part : split(src, ','))
    if (!part.empty()) out.push_back(parse_poly(part, r));
  return out;
}

mpq_class parse_rat(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

std::vector<mpq_class> parse_rats(const std::string& s) {
  std::vector<mpq_class> out;
  for (const std::string& part : split(s, ','))
    if (!part.empty()) out.push_back(parse_rat(part));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* yn(bool b) { return b ? "yes" : "no"; }

std::string tri_str(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "unknown";
  }
}

void emit_ideal(const char* cmd, const Ideal& I, const GlobalOpts& g) {
  const std::vector<Poly>& gb = I.groebner();
  if (g.json) {
    ojson out;
    out["command"] = cmd;
    ojson gens = ojson::array();
    for (const Poly& p : gb) gens.push_back(p.str());
    out["generators"] = gens;
    std::cout << out.dump() << "\n";
    return;
  }
  if (gb.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const Poly& p : gb) std::cout << p.str() << "\n";
}

// ------------------------------------------------------------------ commands

struct Cmd {
  GlobalOpts g;
  std::string ideal, other, poly, by, f, gg, psi, phi, var, z, def, matrix;
  std::string pvals, lvals, phiExps, tinyPolicy = "span";
  std::vector<std::string> components;
  int m = 0, n = 0, a = 0, c = 0, r = 0, mm = -1;
  int batch = 4, maxDraws = 64;
  bool refute = false;
  int rc = 0;
};

void cmd_gb(Cmd& o) {
  auto r = ring_from(o.g);
  emit_ideal("gb", Ideal(r, parse_gens(o.ideal, r)), o.g);
}

void cmd_member(Cmd& o) {
  auto r = ring_from(o.g);
  Ideal I(r, parse_gens(o.ideal, r));
  bool in = ideal_member(parse_poly(o.poly, r), I);
  if (o.g.json) {
    ojson out;
    out["command"] = "member";
    out["member"] = in;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << yn(in) << "\n";
  }
  o.rc = in ? 0 : 1;
}

void cmd_intersect(Cmd& o) {
  auto r = ring_from(o.g);
  Ideal A(r, parse_gens(o.ideal, r));
  Ideal B(r, parse_gens(o.other, r));
  emit_ideal("intersect", ideal_intersect(A, B), o.g);
}

void cmd_quotient(Cmd& o) {
  auto r = ring_from(o.g);
  Ideal I(r, parse_gens(o.ideal, r));
  emit_ideal("quotient", ideal_quotient(I, parse_poly(o.by, r)), o.g);
}

void cmd_saturate(Cmd& o) {
  auto r = ring_from(o.g);
  Ideal I(r, parse_gens(o.ideal, r));
  emit_ideal("saturate", saturate(I, parse_poly(o.by, r)), o.g);
}

void cmd_frob_power(Cmd& o) {
  auto r = ring_from(o.g);
  Ideal I(r, parse_gens(o.ideal, r));
  TinyFieldPolicy pol;
  if (o.tinyPolicy == "refuse") pol = TinyFieldPolicy::Refuse;
  else if (o.tinyPolicy == "span") pol = TinyFieldPolicy::MultinomialSpan;
  else if (o.tinyPolicy == "scan") pol = TinyFieldPolicy::ExhaustiveScan;
  else throw std::invalid_argument("unknown tiny-field policy '" + o.tinyPolicy + "'");
  emit_ideal("frob-power", elementwise_power(I, static_cast<unsigned long>(o.m), pol), o.g);
}

void cmd_pure(Cmd& o) {
  auto r = ring_from(o.g);
  Ideal I(r, parse_gens(o.ideal, r));
  std::optional<int> var;
  if (!o.var.empty()) {
    int idx = r->varIndex(o.var);
    if (idx < 0) throw std::invalid_argument("unknown variable '" + o.var + "'");
    var = idx;
  }
  emit_ideal("pure", pure_part(I, var), o.g);
}

void cmd_torsion(Cmd& o) {
  auto r = ring_from(o.g);
  TorsionResult t = torsion_length(Ideal(r, parse_gens(o.ideal, r)));
  if (o.g.json) {
    ojson out;
    out["command"] = "torsion";
    out["length"] = t.len.length;
    out["stabilized"] = t.len.stabilized;
    out["truncationDegree"] = t.len.truncationDegree;
    ojson gens = ojson::array();
    for (const Poly& p : t.pure.groebner()) gens.push_back(p.str());
    out["pure"] = gens;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "length: " << t.len.length << "\n";
    std::cout << "stabilized: " << yn(t.len.stabilized) << "\n";
    std::cout << "truncation degree: " << t.len.truncationDegree << "\n";
    std::cout << "pure:\n";
    for (const Poly& p : t.pure.groebner()) std::cout << p.str() << "\n";
  }
  o.rc = t.len.stabilized ? 0 : 1;
}

void cmd_dsupp(Cmd& o) {
  if (o.g.laurent.empty())
    throw std::invalid_argument("dsupp needs --laurent for the matrix entries");
  if (o.var.empty()) throw std::invalid_argument("dsupp needs --var");
  auto base = ring_from(o.g);
  if (base->varIndex(o.var) < 0)
    throw std::invalid_argument("--var must name a ring variable");
  std::istringstream in(read_file(o.matrix));
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("empty matrix file");
  int n = std::stoi(line);
  if (n < 1) throw std::invalid_argument("matrix size must be positive");
  SqMatrix<DualLaurent> M(n, DualLaurent(LaurentPoly::zero(base, o.g.laurent),
                                         LaurentPoly::zero(base, o.g.laurent)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!std::getline(in, line))
        throw std::invalid_argument("matrix file ends before all entries are read");
      M.at(i, j) = parse_dual_laurent(line, base, o.g.laurent);
    }
  DsuppResult res = dsupp_dual(M, o.var);
  if (o.g.json) {
    ojson out;
    out["command"] = "dsupp";
    out["equation"] = res.equation.str();
    out["cartier"] = res.isCartier;
    out["witness"] = res.polarWitness ? ojson(*res.polarWitness) : ojson(nullptr);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "equation: " << res.equation.str() << "\n";
    std::cout << "cartier: " << yn(res.isCartier) << "\n";
    if (res.polarWitness) std::cout << "witness: " << *res.polarWitness << "\n";
  }
  o.rc = res.isCartier ? 0 : 1;
}

void cmd_cartier(Cmd& o) {
  auto r = ring_from(o.g);
  int yvar = r->varIndex(o.var);
  if (yvar < 0) throw std::invalid_argument("--yvar must name a ring variable");
  CartierTestResult t =
      cartier_principal_test(parse_poly(o.f, r), parse_poly(o.gg, r), yvar, o.r);
  if (o.g.json) {
    ojson out;
    out["command"] = "cartier";
    out["precondition"] = t.preconditionOk;
    out["member"] = t.member;
    out["diagnostic"] = t.diagnostic;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "precondition: " << (t.preconditionOk ? "ok" : "failed") << "\n";
    std::cout << "member: " << yn(t.member) << "\n";
    if (!t.diagnostic.empty()) std::cout << "diagnostic: " << t.diagnostic << "\n";
  }
  o.rc = t.member ? 0 : 1;
}

void cmd_chow_pair(Cmd& o) {
  auto r = ring_from(o.g);
  std::optional<int> mult;
  if (o.mm >= 0) mult = o.mm;
  emit_ideal("chow-pair", chow_ideal_hypersurface_pair(parse_poly(o.f, r), o.z, mult),
             o.g);
}

void cmd_chow_axes(Cmd& o) { emit_ideal("chow-axes", chow_ideal_axes(o.n), o.g); }

std::pair<int, std::string> split_component(const std::string& spec) {
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("component '" + spec + "' lacks a multiplicity prefix");
  int mult = std::stoi(spec.substr(0, colon));
  return {mult, spec.substr(colon + 1)};
}

void cmd_chow_hull(Cmd& o) {
  auto r = ring_from(o.g);
  std::vector<CycleComponent> cyc;
  for (const std::string& spec : o.components) {
    auto [mult, rest] = split_component(spec);
    CycleComponent comp;
    comp.ideal = Ideal(r, parse_gens(rest, r));
    comp.multiplicity = mult;
    cyc.push_back(comp);
  }
  emit_ideal("chow-hull", chow_hull(cyc), o.g);
}

void cmd_chow_sample(Cmd& o) {
  auto r = ring_from(o.g);
  auto pt = make_ring(parse_field(o.g.field), {"t"});
  std::vector<CycleComponent> cyc;
  for (const std::string& spec : o.components) {
    auto [mult, rest] = split_component(spec);
    CycleComponent comp;
    comp.ideal = Ideal(r, {});
    comp.multiplicity = mult;
    for (const std::string& part : split(rest, ','))
      comp.param.push_back(parse_poly(part, pt));
    cyc.push_back(comp);
  }
  ChowSampleResult res = sample_chow_ideal(cyc, o.g.seed, o.batch, o.maxDraws);
  if (o.g.json) {
    ojson out;
    out["command"] = "chow-sample";
    ojson gens = ojson::array();
    for (const Poly& p : res.ideal.groebner()) gens.push_back(p.str());
    out["generators"] = gens;
    out["stabilized"] = res.stabilized;
    out["draws"] = res.draws;
    std::cout << out.dump() << "\n";
  } else {
    for (const Poly& p : res.ideal.groebner()) std::cout << p.str() << "\n";
    std::cout << "stabilized: " << yn(res.stabilized) << "\n";
    std::cout << "draws: " << res.draws << "\n";
  }
  o.rc = res.stabilized ? 0 : 1;
}

void cmd_check_plane(Cmd& o) {
  auto r = ring_from(o.g);
  if (r->vars.size() != 2)
    throw std::invalid_argument("check-plane needs exactly two ring variables");
  PlaneCurve C = make_plane_curve(parse_poly(o.f, r), 0, 1);
  auto coef = make_ring(parse_field(o.g.field), {r->vars[1]});
  const std::string& xname = r->vars[0];
  PlaneDeformation d;
  d.curve = C;
  d.psi = o.psi.empty() ? section_zero(C)
                        : section_reduce(C, parse_laurent(o.psi, coef, xname));
  d.phi = section_reduce(C, parse_laurent(o.phi, coef, xname));
  PlaneFlags fl = plane_classify(d);
  if (o.g.json) {
    ojson out;
    out["command"] = "check-plane";
    out["cflat"] = fl.cflat;
    out["flat"] = fl.flat;
    out["globalizes"] = tri_str(fl.globalizes);
    out["psiRegular"] = fl.psiRegular;
    out["diagnostic"] = fl.diagnostic;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "C-flat: " << yn(fl.cflat) << "; flat: " << yn(fl.flat)
              << "; globalizes: " << tri_str(fl.globalizes)
              << "; psi regular: " << yn(fl.psiRegular) << "\n";
    if (!fl.diagnostic.empty()) std::cout << "diagnostic: " << fl.diagnostic << "\n";
  }
  o.rc = fl.cflat ? 0 : 1;
}

void cmd_check_monomial(Cmd& o) {
  Semigroup E = make_semigroup(o.a, o.c);
  std::vector<long> exps;
  for (const std::string& part : split(o.phiExps, ','))
    if (!part.empty()) exps.push_back(std::stol(part));
  MonomialFlags fl = monomial_classify(E, exps);
  if (o.g.json) {
    ojson out;
    out["command"] = "check-monomial";
    out["cflat"] = fl.cflat;
    out["flat"] = fl.flat;
    out["globalizes"] = fl.globalizes;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "C-flat: " << yn(fl.cflat) << "; flat: " << yn(fl.flat)
              << "; globalizes: " << yn(fl.globalizes) << "\n";
  }
  o.rc = fl.cflat ? 0 : 1;
}

void cmd_check_cn(Cmd& o) {
  int m = o.mm >= 1 ? o.mm : o.n;
  CnDeformation d = cn_parse(read_file(o.def), o.n, m, parse_field(o.g.field));
  bool flat = cn_is_flat(d);
  bool kflat = cn_is_kflat(d);
  std::optional<bool> chow;
  if (o.n >= 3) chow = cn_chow_vanishing(d);
  std::optional<CnRefutation> ref;
  if (o.refute) ref = cn_refute_by_projection(d, o.g.seed);
  if (o.g.json) {
    ojson out;
    out["command"] = "check-cn";
    out["kflat"] = kflat;
    out["flat"] = flat;
    out["chowVanishing"] = chow ? ojson(*chow) : ojson(nullptr);
    out["maxPoleOrder"] = cn_max_pole_order(d);
    if (ref) {
      ojson rj;
      rj["refuted"] = ref->refuted;
      rj["draws"] = ref->draws;
      if (ref->refuted) {
        ojson ab = ojson::array(), ap = ojson::array(), la = ojson::array();
        for (const mpq_class& q : ref->abar) ab.push_back(q.get_str());
        for (const mpq_class& q : ref->aprime) ap.push_back(q.get_str());
        for (const mpq_class& q : ref->lambda) la.push_back(q.get_str());
        rj["abar"] = ab;
        rj["aprime"] = ap;
        rj["lambda"] = la;
        rj["polarTerm"] = ref->polarTerm;
      }
      out["refutation"] = rj;
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "K-flat: " << yn(kflat) << "; flat: " << yn(flat)
              << "; chow vanishing: " << (chow ? yn(*chow) : "n/a")
              << "; max pole order: " << cn_max_pole_order(d) << "\n";
    if (ref) {
      std::cout << "refuted: " << yn(ref->refuted) << "\n";
      std::cout << "draws: " << ref->draws << "\n";
      if (ref->refuted) {
        auto join = [](const std::vector<mpq_class>& v) {
          std::string s;
          for (size_t i = 0; i < v.size(); ++i)
            s += (i ? " " : "") + v[i].get_str();
          return s;
        };
        std::cout << "abar: " << join(ref->abar) << "\n";
        std::cout << "aprime: " << join(ref->aprime) << "\n";
        if (!ref->lambda.empty()) std::cout << "lambda: " << join(ref->lambda) << "\n";
        std::cout << "polar term: " << ref->polarTerm << "\n";
      }
    }
  }
  o.rc = kflat ? 0 : 1;
}

void cmd_cn_smooth(Cmd& o) {
  FieldSpec F = parse_field(o.g.field);
  std::vector<mpq_class> p = parse_rats(o.pvals);
  std::vector<mpq_class> lam = parse_rats(o.lvals);
  CnSmoothing sm = cn_smoothing(F, p, lam);
  CnDeformation first = cn_smoothing_first_order(F, p, lam);
  if (o.g.json) {
    ojson out;
    out["command"] = "cn-smooth";
    ojson eqs = ojson::array();
    for (const Poly& q : sm.equations) eqs.push_back(q.str());
    out["equations"] = eqs;
    out["firstOrder"] = cn_str(first);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "equations:\n";
    for (const Poly& q : sm.equations) std::cout << q.str() << "\n";
    std::cout << "first-order:\n" << cn_str(first);
  }
}

void cmd_subset_lemma(Cmd& o) {
  Semigroup E = make_semigroup(o.a, o.c);
  SemigroupLemmaReport rep = check_semigroup_lemma(E);
  if (o.g.json) {
    ojson out;
    out["command"] = "subset-lemma";
    out["aPass"] = rep.aPass;
    out["bPass"] = rep.bPass;
    out["counterexample"] = rep.counterexample ? ojson(*rep.counterexample) : ojson(nullptr);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "identity (a): " << (rep.aPass ? "pass" : "fail") << "\n";
    std::cout << "identity (b): " << (rep.bPass ? "pass" : "fail") << "\n";
    if (rep.counterexample)
      std::cout << "counterexample: m = " << *rep.counterexample << "\n";
  }
  o.rc = (rep.aPass && rep.bPass) ? 0 : 1;
}

void cmd_semigroup(Cmd& o) {
  Semigroup E = make_semigroup(o.a, o.c);
  std::vector<long> gaps = E.gaps();
  if (o.g.json) {
    ojson out;
    out["command"] = "semigroup";
    out["a"] = E.a;
    out["c"] = E.c;
    out["frobenius"] = E.frobenius();
    out["gapCount"] = E.gapCount();
    out["gaps"] = gaps;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "a: " << E.a << "\n";
    std::cout << "c: " << E.c << "\n";
    std::cout << "frobenius: " << E.frobenius() << "\n";
    std::cout << "gap count: " << E.gapCount() << "\n";
    std::cout << "gaps:";
    for (long g : gaps) std::cout << " " << g;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on divisor families: Groebner bases, Chow "
               "equations, and flatness tests for curve deformations"};
  app.require_subcommand(1);
  Cmd o;

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of an ideal");
  gb->add_option("--ideal", o.ideal, "Comma-separated generators")->required();
  gb->callback([&] { cmd_gb(o); });

  auto* member = app.add_subcommand("member", "Ideal membership test");
  member->add_option("--poly", o.poly, "Polynomial to test")->required();
  member->add_option("--ideal", o.ideal, "Comma-separated generators")->required();
  member->callback([&] { cmd_member(o); });

  auto* inter = app.add_subcommand("intersect", "Intersection of two ideals");
  inter->add_option("--ideal", o.ideal, "First ideal")->required();
  inter->add_option("--other", o.other, "Second ideal")->required();
  inter->callback([&] { cmd_intersect(o); });

  auto* quot = app.add_subcommand("quotient", "Colon ideal (I : f)");
  quot->add_option("--ideal", o.ideal, "Ideal generators")->required();
  quot->add_option("--by", o.by, "Divisor polynomial")->required();
  quot->callback([&] { cmd_quotient(o); });

  auto* sat = app.add_subcommand("saturate", "Saturation (I : f^infinity)");
  sat->add_option("--ideal", o.ideal, "Ideal generators")->required();
  sat->add_option("--by", o.by, "Saturating polynomial")->required();
  sat->callback([&] { cmd_saturate(o); });

  auto* frob = app.add_subcommand("frob-power", "Element-wise m-th power of an ideal");
  frob->add_option("--ideal", o.ideal, "Ideal generators")->required();
  frob->add_option("--m", o.m, "Exponent")->required();
  frob->add_option("--tiny-policy", o.tinyPolicy, "refuse, span, or scan (default span)");
  frob->callback([&] { cmd_frob_power(o); });

  auto* pure = app.add_subcommand("pure", "Remove components supported at the origin");
  pure->add_option("--ideal", o.ideal, "Ideal generators")->required();
  pure->add_option("--var", o.var, "Saturate by this variable only");
  pure->callback([&] { cmd_pure(o); });

  auto* tor = app.add_subcommand("torsion", "Length of pure_part(I)/I");
  tor->add_option("--ideal", o.ideal, "Ideal generators")->required();
  tor->callback([&] { cmd_torsion(o); });

  auto* ds = app.add_subcommand("dsupp", "Divisorial support equation over dual numbers");
  ds->add_option("--matrix", o.matrix, "File: first line n, then n^2 entries")->required();
  ds->add_option("--var", o.var, "Characteristic variable (a ring variable)")->required();
  ds->callback([&] { cmd_dsupp(o); });

  auto* car = app.add_subcommand("cartier", "Principal multiple test g in (f, y^r)");
  car->add_option("--f", o.f, "Central fiber equation")->required();
  car->add_option("--g", o.gg, "Candidate numerator")->required();
  car->add_option("--yvar", o.var, "Polar variable name")->required();
  car->add_option("--r", o.r, "Pole order")->required();
  car->callback([&] { cmd_cartier(o); });

  auto* cp = app.add_subcommand("chow-pair", "Chow equations of a hypersurface pair");
  cp->add_option("--f", o.f, "Hypersurface equation")->required();
  cp->add_option("--z", o.z, "Name of the adjoined variable")->required();
  cp->add_option("--m", o.mm, "Multiplicity bound (defaults to deg f)");
  cp->callback([&] { cmd_chow_pair(o); });

  auto* ca = app.add_subcommand("chow-axes", "Chow equations of the n coordinate axes");
  ca->add_option("--n", o.n, "Number of axes")->required();
  ca->callback([&] { cmd_chow_axes(o); });

  auto* ch = app.add_subcommand("chow-hull", "Chow hull of a weighted cycle");
  ch->add_option("--component", o.components, "m:g1,g2,... (repeatable)")->required();
  ch->callback([&] { cmd_chow_hull(o); });

  auto* cs = app.add_subcommand("chow-sample", "Sampled Chow equations of a cycle");
  cs->add_option("--component", o.components,
                 "m:p1,p2,... parametrization in t (repeatable)")->required();
  cs->add_option("--batch", o.batch, "Draws per stabilization batch");
  cs->add_option("--max-draws", o.maxDraws, "Total draw budget");
  cs->callback([&] { cmd_chow_sample(o); });

  auto* cpl = app.add_subcommand("check-plane", "Classify a plane curve deformation");
  cpl->add_option("--f", o.f, "Curve equation, monic in the second variable")->required();
  cpl->add_option("--psi", o.psi, "Numerator section (default 0)");
  cpl->add_option("--phi", o.phi, "Deformation section")->required();
  cpl->callback([&] { cmd_check_plane(o); });

  auto* cm = app.add_subcommand("check-monomial",
                                "Classify a monomial curve deformation by t-exponents");
  cm->add_option("--a", o.a, "Exponent a of y^c = x^a")->required();
  cm->add_option("--c", o.c, "Exponent c of y^c = x^a")->required();
  cm->add_option("--phi", o.phiExps, "Comma-separated t-exponents")->required();
  cm->callback([&] { cmd_check_monomial(o); });

  auto* cc = app.add_subcommand("check-cn", "Classify a first-order axes deformation");
  cc->add_option("--n", o.n, "Number of axes")->required();
  cc->add_option("--m", o.mm, "Ambient axes count (default n)");
  cc->add_option("--def", o.def, "Deformation file: lines 'i j expr'")->required();
  cc->add_flag("--refute", o.refute, "Search for a polar projection witness");
  cc->callback([&] { cmd_check_cn(o); });

  auto* sm = app.add_subcommand("cn-smooth", "One-parameter smoothing of the axes");
  sm->add_option("--p", o.pvals, "Comma-separated pairwise distinct parameters")->required();
  sm->add_option("--lambda", o.lvals, "Comma-separated nonzero scales")->required();
  sm->callback([&] { cmd_cn_smooth(o); });

  auto* sl = app.add_subcommand("subset-lemma", "Verify the two semigroup identities");
  sl->add_option("--a", o.a, "Generator a")->required();
  sl->add_option("--c", o.c, "Generator c")->required();
  sl->callback([&] { cmd_subset_lemma(o); });

  auto* sg = app.add_subcommand("semigroup", "Gaps and Frobenius number of <a, c>");
  sg->add_option("--a", o.a, "Generator a")->required();
  sg->add_option("--c", o.c, "Generator c")->required();
  sg->callback([&] { cmd_semigroup(o); });

  for (CLI::App* sub : app.get_subcommands(nullptr)) add_globals(sub, o.g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return o.rc;
}
