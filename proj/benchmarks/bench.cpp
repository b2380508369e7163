#include <benchmark/benchmark.h>

#include <memory>
#include <string>
#include <vector>

#include "koszul/graph.hpp"
#include "koszul/groebner.hpp"
#include "koszul/hilbert.hpp"
#include "koszul/intpoly.hpp"
#include "koszul/monomial.hpp"
#include "koszul/quotient_ring.hpp"
#include "koszul/resolution.hpp"
#include "koszul/textio.hpp"
#include "koszul/veronese_gb.hpp"

using namespace koszul;

static void BM_ObstructionSeries(benchmark::State& state) {
  AlgebraNumerics a = veronese_numerics(6, 7);
  for (auto _ : state) {
    TruncatedSeries u =
        expand_rational_series(a.h_poly.negate_variable(), a.codim,
                               static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(u.coeff.data());
  }
}
BENCHMARK(BM_ObstructionSeries)->Arg(130)->Arg(400);

static void BM_VeroneseGroebner(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  auto gens = veronese2_kernel_gens(n);
  auto ord = veronese2_order(n);
  for (auto _ : state) {
    GroebnerCheck chk = is_groebner(gens, ord, Field{0}, 6);
    benchmark::DoNotOptimize(chk.passed);
  }
}
BENCHMARK(BM_VeroneseGroebner)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Chordality(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  VarGraph g(names);
  // interval graph: bands of width three are chordal
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n && j <= i + 3; ++j)
      g.add_edge(static_cast<size_t>(i), static_cast<size_t>(j));
  for (auto _ : state) {
    ChordalityResult r = is_chordal(g);
    benchmark::DoNotOptimize(r.chordal);
  }
}
BENCHMARK(BM_Chordality)->Arg(64)->Arg(256);

static void BM_ResidueFieldResolution(benchmark::State& state) {
  ParsedInput in =
      parse_input("ring x, y, z; ideal x^2, x*y, x*z, y^2, y*z, z^2;");
  for (auto _ : state) {
    auto R = std::make_shared<QuotientRing>(
        in.vars, in.ideal_gens, MonomialOrder::standard(3), Field{0}, 8);
    auto out = minimal_resolution(
        GradedModulePresentation::residue_field(R),
        static_cast<int>(state.range(0)), 8);
    benchmark::DoNotOptimize(out.second.cells.size());
  }
}
BENCHMARK(BM_ResidueFieldResolution)->Arg(4)->Arg(6)->Unit(
    benchmark::kMillisecond);

static void BM_MonomialColon(benchmark::State& state) {
  std::vector<std::string> vars = {"a", "b", "c", "d", "e"};
  std::vector<Monomial> gens;
  // all monomials of degree three in five variables
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j)
      for (int k = j; k < 5; ++k) {
        Monomial m;
        m.exp.assign(5, 0);
        ++m.exp[i];
        ++m.exp[j];
        ++m.exp[k];
        gens.push_back(m);
      }
  MonomialIdeal I = MonomialIdeal::make(vars, gens);
  Monomial q;
  q.exp = {2, 1, 0, 0, 0};
  for (auto _ : state) {
    std::vector<Monomial> r = monomial_colon(I.gens, q);
    benchmark::DoNotOptimize(r.size());
  }
}
BENCHMARK(BM_MonomialColon);

BENCHMARK_MAIN();
