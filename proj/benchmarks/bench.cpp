#include <benchmark/benchmark.h>

#include "kflat/dsupp.hpp"
#include "kflat/field.hpp"
#include "kflat/groebner.hpp"
#include "kflat/laurent.hpp"
#include "kflat/parse.hpp"
#include "kflat/poly.hpp"

using namespace kflat;

namespace {

void BM_BuchbergerCyclic4(benchmark::State& state) {
  auto r = make_ring(FieldSpec::rationals(), {"x", "y", "z", "w"});
  std::vector<Poly> gens = {
      parse_poly("x + y + z + w", r),
      parse_poly("x*y + y*z + z*w + w*x", r),
      parse_poly("x*y*z + y*z*w + z*w*x + w*x*y", r),
      parse_poly("x*y*z*w - 1", r)};
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(r, gens, r->order));
}
BENCHMARK(BM_BuchbergerCyclic4)->Unit(benchmark::kMillisecond);

void BM_CharpolyLaurent5(benchmark::State& state) {
  auto kv = make_ring(FieldSpec::rationals(), {"v"});
  SqMatrix<LaurentPoly> M(5, LaurentPoly::zero(kv, "u"));
  long c = 1;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      M.at(i, j) = LaurentPoly::term(kv, "u", -(c % 3),
                                     Poly::constant(kv, (c % 7) - 3)) +
                   LaurentPoly::term(kv, "u", c % 2, Poly::constant(kv, (c % 5) - 2));
      c += 11;
    }
  for (auto _ : state) benchmark::DoNotOptimize(char_poly_laurent(M, "v"));
}
BENCHMARK(BM_CharpolyLaurent5)->Unit(benchmark::kMillisecond);

void BM_ElementwisePowerF7(benchmark::State& state) {
  auto r = make_ring(FieldSpec::prime(7), {"x", "y", "z"});
  Ideal I(r, {Poly::variable(r, 0), Poly::variable(r, 1), Poly::variable(r, 2)});
  for (auto _ : state)
    benchmark::DoNotOptimize(
        elementwise_power(I, 8, TinyFieldPolicy::MultinomialSpan));
}
BENCHMARK(BM_ElementwisePowerF7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
