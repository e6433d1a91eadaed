#include <benchmark/benchmark.h>

#include "creg/poly_parse.hpp"
#include "creg/theorems.hpp"

using namespace creg;

namespace {

PresentedModule scroll_quotient(int n, bool with_z) {
  auto f = nilpotent_scroll_family(n);
  if (with_z) f.ideal.push_back(f.z);
  return PresentedModule::cyclic(f.ring, f.ideal);
}

PresentedModule determinantal() {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y", "z", "t"});
  auto R = GradedRing::quotient(S, parse_polynomials("x^2, x*z, x*t - y*z", *S));
  return PresentedModule::free(R, GradedFreeModule({0}));
}

// Fresh modules each iteration: the Gröbner basis is cached on the module.
void BM_GroebnerScroll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto M = scroll_quotient(n, true);
    benchmark::DoNotOptimize(M.basis().size());
  }
}
BENCHMARK(BM_GroebnerScroll)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_ResolveScroll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto F = minimal_free_resolution(scroll_quotient(n, true));
    benchmark::DoNotOptimize(F.length());
  }
}
BENCHMARK(BM_ResolveScroll)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_ResolveResidueField(benchmark::State& state) {
  auto S = GradedRing::polynomial(PrimeField(), {"x", "y"});
  auto R = GradedRing::quotient(S, parse_polynomials("x^2, y^2", *S));
  const int len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto F = minimal_free_resolution(PresentedModule::residue_field(R), len);
    benchmark::DoNotOptimize(F.length());
  }
}
BENCHMARK(BM_ResolveResidueField)->Arg(4)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

template <RouteValue (*Route)(const PresentedModule&)>
void BM_Route(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Route(determinantal()).value);
}
BENCHMARK_TEMPLATE(BM_Route, reg_via_betti)->Name("BM_Route/betti")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Route, reg_via_ext)->Name("BM_Route/ext")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Route, reg_via_koszul)->Name("BM_Route/koszul")->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_Route, reg_via_duality)->Name("BM_Route/duality")->Unit(benchmark::kMillisecond);

void BM_CorpusSweep(benchmark::State& state) {
  const auto corpus = random_corpus(1729, static_cast<int>(state.range(0)));
  for (auto _ : state)
    for (const auto& it : corpus) benchmark::DoNotOptimize(regularity_report(it.quotient()).agree);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CorpusSweep)->Arg(8)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FilterRegularCheck(benchmark::State& state) {
  for (auto _ : state) {
    auto f = nilpotent_scroll_family(2);
    auto T = GradedRing::quotient(f.ring, f.ideal);
    benchmark::DoNotOptimize(check_filter_regular_formula(PresentedModule::free(T, GradedFreeModule({0})), f.z));
  }
}
BENCHMARK(BM_FilterRegularCheck)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
