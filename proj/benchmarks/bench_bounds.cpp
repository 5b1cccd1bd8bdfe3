#include <benchmark/benchmark.h>

#include <vector>

#include "twobridge/bounds.hpp"

using namespace twobridge;

namespace {

void BM_BestBound(benchmark::State& state) {
  std::vector<int> entries;
  for (int i = 0; i < state.range(0); ++i) entries.push_back(2 + i % 3);
  if (!classify(ConwayWord(entries)).admissible()) entries.back() += 1;
  const ConwayWord w(entries);
  for (auto _ : state) benchmark::DoNotOptimize(best_bound(w));
}
BENCHMARK(BM_BestBound)->DenseRange(2, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_GeneralBound(benchmark::State& state) {
  const ConwayWord w({2, 3, 4, 2, 6});
  for (auto _ : state) benchmark::DoNotOptimize(bound_general(w));
}
BENCHMARK(BM_GeneralBound)->Unit(benchmark::kMicrosecond);

}  // namespace
