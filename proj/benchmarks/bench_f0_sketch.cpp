#include <benchmark/benchmark.h>

#include <vector>

#include "densestream/f0_sketch.hpp"

using namespace densestream;

namespace {

std::vector<uint64_t> random_elems(size_t count, uint64_t universe, uint64_t seed) {
  Rng rng(seed);
  std::vector<uint64_t> out(count);
  for (auto& e : out) e = uniform_below(rng, universe);
  return out;
}

}  // namespace

static void BM_F0Insert(benchmark::State& state) {
  const auto elems = random_elems(1 << 14, 1 << 24, 3);
  for (auto _ : state) {
    F0Sketch sk({0.1, 1.0 / 9.0, 1 << 24}, 7);
    for (uint64_t e : elems) sk.insert(e);
    benchmark::DoNotOptimize(sk.estimate());
  }
  state.SetItemsProcessed(state.iterations() * elems.size());
}
BENCHMARK(BM_F0Insert);

static void BM_F0UnionQuery(benchmark::State& state) {
  const auto base = random_elems(state.range(0), 1 << 24, 4);
  const auto offline = random_elems(512, 1 << 24, 5);
  F0Sketch sk({0.1, 1.0 / 9.0, 1 << 24}, 9);
  for (uint64_t e : base) sk.insert(e);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sk.estimate_union(offline));
  }
}
BENCHMARK(BM_F0UnionQuery)->Arg(100)->Arg(10000);

BENCHMARK_MAIN();
