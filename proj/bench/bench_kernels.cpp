#include <benchmark/benchmark.h>

#include "affcrystal/bosonic.hpp"

using namespace affcrystal;

namespace {

CrystalSpec singles(int n, int L, int level) {
  CrystalSpec s;
  s.n = n;
  s.level = level;
  s.shapes.assign(static_cast<std::size_t>(L), RectShape{1, 1});
  return s;
}

void BM_GradedWeightTable(benchmark::State& state, Exec exec) {
  RMatrixRegistry reg;
  const TensorCrystal B(3, std::vector<RectShape>(static_cast<std::size_t>(state.range(0)), RectShape{1, 1}));
  const EnergyFunction E(B, reg);
  for (auto _ : state) benchmark::DoNotOptimize(graded_weight_table(B, E, exec));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * B.cardinality()));
}

void BM_Bosonic(benchmark::State& state) {
  RMatrixRegistry reg;
  const auto s = singles(2, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(bosonic_K(s, reg));
}

void BM_KostkaLevel(benchmark::State& state) {
  RMatrixRegistry reg;
  const auto s = singles(3, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(kostka_level(s, reg));
}

}  // namespace

BENCHMARK_CAPTURE(BM_GradedWeightTable, serial, Exec::serial)->Arg(6)->Arg(8);
BENCHMARK_CAPTURE(BM_GradedWeightTable, parallel, Exec::parallel)->Arg(6)->Arg(8);
BENCHMARK(BM_Bosonic)->Arg(6)->Arg(10);
BENCHMARK(BM_KostkaLevel)->Arg(4)->Arg(6);
BENCHMARK_MAIN();
