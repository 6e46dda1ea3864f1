#include <benchmark/benchmark.h>

#include "robinson/copoints.hpp"
#include "robinson/dendrogram.hpp"
#include "robinson/generate.hpp"
#include "robinson/mmodtree.hpp"
#include "robinson/pqtree.hpp"
#include "robinson/translate.hpp"

namespace {

using namespace robinson;

DissimilarityMatrix instance(const benchmark::State& state) {
  return generateRobinson(static_cast<int>(state.range(0)), 7, Profile::Generic);
}

void BM_Dendrogram(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  const IndexSet all = m.all();
  for (auto _ : state) benchmark::DoNotOptimize(buildDendrogram(m, all));
  state.SetComplexityN(state.range(0));
}

void BM_MModuleTree(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  const IndexSet all = m.all();
  for (auto _ : state) benchmark::DoNotOptimize(mmoduleTree(m, all));
  state.SetComplexityN(state.range(0));
}

void BM_PqTree2(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  const IndexSet all = m.all();
  for (auto _ : state) benchmark::DoNotOptimize(pqTree2(m, all));
  state.SetComplexityN(state.range(0));
}

void BM_DeltaPqTree(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  const IndexSet all = m.all();
  for (auto _ : state) benchmark::DoNotOptimize(deltaPqTree(m, all));
  state.SetComplexityN(state.range(0));
}

void BM_Recognize(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  for (auto _ : state) benchmark::DoNotOptimize(recognizeRobinson(m));
  state.SetComplexityN(state.range(0));
}

void BM_PqToMModule(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  const PQTree t = pqTree2(m, m.all());
  for (auto _ : state) benchmark::DoNotOptimize(pqToMModuleTree(m, t));
  state.SetComplexityN(state.range(0));
}

void BM_MModuleToPq(benchmark::State& state) {
  const DissimilarityMatrix m = instance(state);
  const MModuleTree t = mmoduleTree(m, m.all());
  for (auto _ : state) benchmark::DoNotOptimize(mmoduleToPqTree(m, t));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Dendrogram)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_MModuleTree)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_PqTree2)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_DeltaPqTree)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_Recognize)->RangeMultiplier(2)->Range(64, 1024)->Complexity(benchmark::oNSquared);
BENCHMARK(BM_PqToMModule)->RangeMultiplier(2)->Range(64, 1024)->Complexity();
BENCHMARK(BM_MModuleToPq)->RangeMultiplier(2)->Range(64, 1024)->Complexity();

BENCHMARK_MAIN();
