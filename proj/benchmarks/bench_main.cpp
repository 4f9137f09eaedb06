#include <benchmark/benchmark.h>

#include "bier/building.hpp"
#include "bier/catalog.hpp"
#include "bier/classify.hpp"
#include "bier/iso.hpp"
#include "bier/toric.hpp"

namespace {

void BM_CanonicalFormCensus(benchmark::State& state) {
  std::vector<bier::SimplicialComplex> spheres;
  for (int i = 1; i <= bier::catalog::kCensusSize; ++i) spheres.push_back(bier::catalog::sphere(i).complex());
  for (auto _ : state)
    for (const auto& s : spheres) benchmark::DoNotOptimize(bier::canonical_form(s));
}
BENCHMARK(BM_CanonicalFormCensus);

void BM_EnumerateComplexes(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bier::enumerate_complexes(m, 1));
}
BENCHMARK(BM_EnumerateComplexes)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ClassifyBier(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bier::classify_bier(4, 1));
}
BENCHMARK(BM_ClassifyBier)->Unit(benchmark::kMillisecond);

void BM_RealizeNestohedron(benchmark::State& state) {
  const auto b = bier::catalog::building_set(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bier::realize_nestohedron(b));
}
BENCHMARK(BM_RealizeNestohedron)->Arg(1)->Arg(13);

void BM_RealizeP6(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bier::realize_p6());
}
BENCHMARK(BM_RealizeP6);

void BM_ValidateBierCharmap(benchmark::State& state) {
  const auto k = bier::catalog::sphere(1).complex();
  const auto lambda = bier::bier_charmap(4);
  for (auto _ : state) benchmark::DoNotOptimize(bier::validate_charmap(k, lambda));
}
BENCHMARK(BM_ValidateBierCharmap);

}  // namespace
BENCHMARK_MAIN();
