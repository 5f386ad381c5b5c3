#include <benchmark/benchmark.h>

#include "densestream/hashing.hpp"

using namespace densestream;

static void BM_PermHashEval(benchmark::State& state) {
  Rng rng(1);
  const uint64_t p = next_prime(1 << 20);
  const PermHash h = sample_perm_hash(p, rng);
  uint64_t x = 12345;
  for (auto _ : state) {
    x = h(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_PermHashEval);

static void BM_BucketHashEval(benchmark::State& state) {
  Rng rng(2);
  const BucketHash h = sample_bucket_hash(state.range(0), rng);
  uint64_t x = 987654321;
  for (auto _ : state) {
    x += h(x);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_BucketHashEval)->Arg(64)->Arg(4096);

static void BM_NextPrime(benchmark::State& state) {
  uint64_t n = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(next_prime(n));
  }
}
BENCHMARK(BM_NextPrime)->Arg(10000)->Arg(1 << 20);

BENCHMARK_MAIN();
