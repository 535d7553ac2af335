#include <benchmark/benchmark.h>

#include "degen/enumeration.hpp"
#include "degen/generators.hpp"
#include "degen/oracle.hpp"
#include "degen/reducer.hpp"

namespace {

using namespace degen;

void BM_Extract(benchmark::State& state) {
  const Graph g = random_triangulation(state.range(0), 2, 5).graph();
  std::size_t deleted = 0;
  for (auto _ : state) deleted = extract(g).certificate.deletions.size();
  state.counters["deleted"] = static_cast<double>(deleted);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Extract)->RangeMultiplier(10)->Range(100, 10000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FindReduction(benchmark::State& state) {
  const EmbeddedGraph eg = random_triangulation(state.range(0), 3, 5);
  const auto spots = hotspots(eg);
  for (auto _ : state) benchmark::DoNotOptimize(find_reduction(eg.graph(), spots));
}
BENCHMARK(BM_FindReduction)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

void BM_Theorem2AllTriangulations(benchmark::State& state) {
  const auto all = all_triangulations(state.range(0));
  for (auto _ : state)
    for (const auto& eg : all) benchmark::DoNotOptimize(theorem2_witness(eg.graph()));
  state.counters["graphs"] = static_cast<double>(all.size());
}
BENCHMARK(BM_Theorem2AllTriangulations)->DenseRange(9, 11)->Unit(benchmark::kMillisecond);

void BM_OracleExact(benchmark::State& state) {
  const Graph g = state.range(0) == 12 ? named_graph("icosahedron").graph()
                                       : random_triangulation(state.range(0), 4, 5).graph();
  std::size_t optimum = 0;
  for (auto _ : state) optimum = min_deletion_exact(g).optimum;
  state.counters["optimum"] = static_cast<double>(optimum);
}
BENCHMARK(BM_OracleExact)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

}  // namespace
