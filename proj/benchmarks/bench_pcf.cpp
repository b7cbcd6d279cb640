#include <benchmark/benchmark.h>

#include "logpcf/pair_correlation.hpp"
#include "logpcf/sequence.hpp"
#include "logpcf/theory.hpp"

namespace {

void BM_Generate(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    auto ps = logpcf::generate(n);
    benchmark::DoNotOptimize(ps);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Generate)->Arg(1000)->Arg(100000)->Arg(1000000);

void BM_TheoreticalGaps(benchmark::State& state) {
  const auto n = state.range(0);
  for (auto _ : state) {
    auto gaps = logpcf::theoretical_gaps(n);
    benchmark::DoNotOptimize(gaps);
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_TheoreticalGaps)->Arg(1000)->Arg(100000);

void BM_PairCountNaive(benchmark::State& state) {
  const auto ps = logpcf::generate(state.range(0));
  const logpcf::PcfQuery q{1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(logpcf::pair_count_naive(ps, q));
  }
}
BENCHMARK(BM_PairCountNaive)->Arg(256)->Arg(1024)->Arg(4096);

void BM_PairCountFast(benchmark::State& state) {
  const auto ps = logpcf::generate(state.range(0));
  const logpcf::PcfQuery q{1.0, 1.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(logpcf::pair_count_fast(ps, q));
  }
}
BENCHMARK(BM_PairCountFast)->Arg(256)->Arg(1024)->Arg(4096)->Arg(100000)->Arg(1000000);

void BM_PcfCurve(benchmark::State& state) {
  const auto ps = logpcf::generate(state.range(0));
  std::vector<double> grid(100);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    grid[i] = 0.05 * static_cast<double>(i + 1);
  }
  for (auto _ : state) {
    auto table = logpcf::pcf_curve(ps, grid, 1.0);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_PcfCurve)->Arg(100000);

void BM_PcfBounds(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(logpcf::pcf_bounds(100000, 2.5));
  }
}
BENCHMARK(BM_PcfBounds);

void BM_PcfLimit(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    s += 1e-4;
    benchmark::DoNotOptimize(logpcf::pcf_limit(s));
  }
}
BENCHMARK(BM_PcfLimit);

}  // namespace

BENCHMARK_MAIN();
