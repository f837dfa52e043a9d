#include <benchmark/benchmark.h>

#include "linearr/arrangement.hpp"
#include "linearr/constructions.hpp"
#include "linearr/cups_caps.hpp"
#include "linearr/verify.hpp"

using namespace linearr;

namespace {

// Tangents to y = x^2 at distinct integers: a simple arrangement of n lines.
LineFamily tangents(std::int64_t n) {
  std::vector<Line> lines;
  for (std::int64_t t = 0; t < n; ++t) lines.push_back(Line{Rat(2 * t), Rat(-t * t)});
  return LineFamily(lines);
}

void BM_EnumerateCells(benchmark::State& state) {
  const LineFamily f = construct_F(3, 3, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cells(f));
  state.counters["lines"] = static_cast<double>(f.size());
}
BENCHMARK(BM_EnumerateCells)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_LongestCup(benchmark::State& state) {
  const LineFamily f = tangents(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(longest_cup(f));
}
BENCHMARK(BM_LongestCup)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMicrosecond);

void BM_ExistsConvex(benchmark::State& state) {
  const LineFamily f = construct_thm12(3, 6);
  const ConvexSearchOptions opts{state.range(0) ? PruneMode::hereditary : PruneMode::off, 1};
  for (auto _ : state) benchmark::DoNotOptimize(exists_n_convex(f, 6, opts));
}
BENCHMARK(BM_ExistsConvex)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ConstructRecursive(benchmark::State& state) {
  ConstructOptions opts;
  for (auto _ : state) {
    // Vary epsilon so the memo table does not answer from cache.
    opts.epsilon = opts.epsilon / Rat(2);
    benchmark::DoNotOptimize(construct_F(3, 3, state.range(0), opts));
  }
}
BENCHMARK(BM_ConstructRecursive)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond)->Iterations(5);

}  // namespace

BENCHMARK_MAIN();
