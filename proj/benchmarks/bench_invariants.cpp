#include <benchmark/benchmark.h>

#include <vector>

#include "twobridge/invariants.hpp"

using namespace twobridge;

namespace {

ConwayWord balanced(int tangles, int twists) { return ConwayWord(std::vector<int>(static_cast<std::size_t>(tangles), twists)); }

void BM_Bracket(benchmark::State& state) {
  const Diagram d = build_diagram(balanced(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(kauffman_bracket(d));
  state.counters["crossings"] = d.crossing_count();
}
BENCHMARK(BM_Bracket)->DenseRange(2, 8, 2);

void BM_Jones(benchmark::State& state) {
  const Diagram d = build_diagram(balanced(static_cast<int>(state.range(0)), 3));
  for (auto _ : state) benchmark::DoNotOptimize(jones(d));
}
BENCHMARK(BM_Jones)->DenseRange(2, 8, 2);

void BM_BuildDiagram(benchmark::State& state) {
  const ConwayWord w = balanced(static_cast<int>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(build_diagram(w));
}
BENCHMARK(BM_BuildDiagram)->Arg(2)->Arg(8)->Arg(32);

}  // namespace
