#include <benchmark/benchmark.h>

#include <map>

#include "degen/cuts.hpp"
#include "degen/degeneracy.hpp"
#include "degen/discharging.hpp"
#include "degen/embedding.hpp"
#include "degen/generators.hpp"
#include "degen/potential.hpp"

namespace {

using namespace degen;

const EmbeddedGraph& sample(std::size_t n, int min_degree) {
  static std::map<std::pair<std::size_t, int>, EmbeddedGraph> cache;
  auto it = cache.find({n, min_degree});
  if (it == cache.end()) it = cache.emplace(std::pair{n, min_degree}, random_triangulation(n, 1, min_degree)).first;
  return it->second;
}

void BM_Gamma(benchmark::State& state) {
  const Graph& g = sample(state.range(0), 5).graph();
  for (auto _ : state) benchmark::DoNotOptimize(gamma(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Gamma)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_CollectClosure(benchmark::State& state) {
  const Graph& g = sample(state.range(0), 3).graph();
  for (auto _ : state) benchmark::DoNotOptimize(collect_closure(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CollectClosure)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_Embed(benchmark::State& state) {
  const Graph& g = sample(state.range(0), 5).graph();
  for (auto _ : state) benchmark::DoNotOptimize(embed_graph(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Embed)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_Discharging(benchmark::State& state) {
  const EmbeddedGraph& eg = sample(state.range(0), 5);
  for (auto _ : state) benchmark::DoNotOptimize(run_discharging(eg));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Discharging)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_BadCuts(benchmark::State& state) {
  const Graph& g = sample(state.range(0), 5).graph();
  for (auto _ : state) benchmark::DoNotOptimize(find_bad_cuts(g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BadCuts)->RangeMultiplier(10)->Range(100, 10000)->Complexity();

void BM_RandomTriangulation(benchmark::State& state) {
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(random_triangulation(state.range(0), seed++, 5));
}
BENCHMARK(BM_RandomTriangulation)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
