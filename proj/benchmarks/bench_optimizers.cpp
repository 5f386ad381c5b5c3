#include <benchmark/benchmark.h>

#include "densestream/optimizers.hpp"
#include "densestream/stream_io.hpp"

using namespace densestream;

static void BM_MaxCutDenseF0(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  const StreamFile f = gen_erdos_renyi(n, 0.5, 11);
  const auto stream = f.encoded_edges(n);
  DenseRunConfig cfg;
  cfg.n = n;
  cfg.eps = 0.2;
  cfg.alpha = 0.2;
  cfg.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxcut_dense(stream, cfg).value_estimate);
  }
}
BENCHMARK(BM_MaxCutDenseF0)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_DensestDenseF0(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  const StreamFile f = gen_planted_clique(n, (2 * n) / 3, 0.1, 13);
  const auto stream = f.encoded_edges(n);
  DenseRunConfig cfg;
  cfg.n = n;
  cfg.eps = 0.25;
  cfg.alpha = 0.15;
  cfg.seed = 4;
  for (auto _ : state) {
    benchmark::DoNotOptimize(densest_dense(stream, cfg).density_estimate);
  }
}
BENCHMARK(BM_DensestDenseF0)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_MaxCutBrute(benchmark::State& state) {
  const uint32_t n = static_cast<uint32_t>(state.range(0));
  const StreamFile f = gen_erdos_renyi(n, 0.5, 17);
  Graph g;
  g.n = n;
  g.edges = f.encoded_edges(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(maxcut_brute(g).second);
  }
}
BENCHMARK(BM_MaxCutBrute)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
