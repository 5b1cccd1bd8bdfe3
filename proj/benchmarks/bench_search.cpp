#include <benchmark/benchmark.h>

#include "twobridge/search.hpp"

using namespace twobridge;

namespace {

void BM_ExactTwoTangle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const Diagram d = build_diagram(ConwayWord({m, m + 1}));
  SearchResult r;
  for (auto _ : state) r = exact_ur(d);
  state.counters["explored"] = static_cast<double>(r.explored);
}
BENCHMARK(BM_ExactTwoTangle)->DenseRange(3, 9, 2)->Unit(benchmark::kMillisecond);

void BM_ExactByTest(benchmark::State& state) {
  const Diagram d = build_diagram(ConwayWord({3, 2, 3, 2, 3}));
  SearchOptions o;
  o.test = state.range(0) ? TrivialityTest::Jones : TrivialityTest::Fraction;
  for (auto _ : state) benchmark::DoNotOptimize(exact_ur(d, o));
  state.SetLabel(state.range(0) ? "jones" : "fraction");
}
BENCHMARK(BM_ExactByTest)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExactDedup(benchmark::State& state) {
  const Diagram d = build_diagram(ConwayWord({5, 1, 4, 3}));
  SearchOptions o;
  o.dedup = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(exact_ur(d, o));
}
BENCHMARK(BM_ExactDedup)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace
