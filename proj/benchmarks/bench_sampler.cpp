#include <benchmark/benchmark.h>

#include <vector>

#include "densestream/sampler.hpp"

using namespace densestream;

static void BM_SamplerStream(benchmark::State& state) {
  Rng rng(1);
  const uint64_t universe = 10000;
  std::vector<uint64_t> stream(1 << 15);
  for (auto& e : stream) e = uniform_below(rng, universe);
  for (auto _ : state) {
    SamplerConfig cfg;
    cfg.universe_size = universe;
    cfg.walk_length = state.range(0);
    cfg.lambda = 0.1;
    cfg.seed = 5;
    DenseSampler sampler(cfg);
    for (uint64_t e : stream) sampler.insert(e);
    sampler.finalize();
    benchmark::DoNotOptimize(sampler.stream_size());
  }
  state.SetItemsProcessed(state.iterations() * stream.size());
}
BENCHMARK(BM_SamplerStream)->Arg(1024)->Arg(4096);

static void BM_SamplerEstimate(benchmark::State& state) {
  Rng rng(2);
  SamplerConfig cfg;
  cfg.universe_size = 10000;
  cfg.walk_length = 4096;
  cfg.lambda = 0.1;
  cfg.seed = 6;
  DenseSampler sampler(cfg);
  for (int i = 0; i < (1 << 14); ++i)
    sampler.insert(uniform_below(rng, cfg.universe_size));
  sampler.finalize();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        sampler.estimate([](uint64_t e) { return (e & 1) ? 1.0 : 0.0; }));
  }
}
BENCHMARK(BM_SamplerEstimate);

BENCHMARK_MAIN();
