#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <vector>

#include "densestream/f0_sketch.hpp"

using namespace densestream;

namespace {

std::vector<uint64_t> random_distinct(uint64_t universe, size_t count, Rng& rng) {
  std::set<uint64_t> seen;
  while (seen.size() < count) seen.insert(uniform_below(rng, universe));
  return {seen.begin(), seen.end()};
}

}  // namespace

TEST_CASE("fresh sketch estimates zero") {
  const F0Sketch sk({0.1, 1.0 / 9.0, 1000}, 1);
  CHECK(sk.estimate() == 0.0);
}

TEST_CASE("same seed and stream give identical estimates") {
  F0Sketch a({0.2, 1.0 / 9.0, 100000}, 99);
  F0Sketch b({0.2, 1.0 / 9.0, 100000}, 99);
  Rng rng(4);
  for (int i = 0; i < 3000; ++i) {
    const uint64_t e = uniform_below(rng, 100000);
    a.insert(e);
    b.insert(e);
  }
  CHECK(a.estimate() == b.estimate());
}

TEST_CASE("capacity scales as 5 over eps squared") {
  const F0Sketch sk({0.1, 1.0 / 9.0, 1000000}, 0);
  CHECK(sk.per_rep_capacity() >= 500);
}

TEST_CASE("duplicates never move the estimate") {
  F0Sketch sk({0.1, 1.0 / 9.0, 1000}, 5);
  for (int i = 0; i < 10; ++i) sk.insert(7);
  CHECK(sk.estimate() == 1.0);
}

TEST_CASE("exact mode counts small sets exactly") {
  F0Sketch sk({0.1, 1.0 / 9.0, 100000}, 5);
  const size_t d = sk.per_rep_capacity();  // threshold
  for (uint64_t e = 1; e <= d; ++e) sk.insert(e);
  CHECK(sk.exact_mode());
  CHECK(sk.estimate() == static_cast<double>(d));
}

TEST_CASE("rejects out-of-universe elements") {
  F0Sketch sk({0.1, 1.0 / 9.0, 10}, 0);
  CHECK_THROWS_AS(sk.insert(10), InputError);
}

TEST_CASE("rejects bad parameters") {
  CHECK_THROWS_AS(F0Sketch({0.0, 0.1, 10}, 0), ConfigError);
  CHECK_THROWS_AS(F0Sketch({0.1, 1.5, 10}, 0), ConfigError);
  CHECK_THROWS_AS(F0Sketch({0.1, 0.1, 0}, 0), ConfigError);
}

TEST_CASE("union queries in exact mode") {
  F0Sketch sk({0.2, 1.0 / 9.0, 100}, 3);
  sk.insert(1);
  sk.insert(2);
  const std::vector<uint64_t> offline{2, 3};
  CHECK(sk.estimate_union(offline) == 3.0);
  CHECK(sk.estimate_union(std::vector<uint64_t>{}) == sk.estimate());

  // Exact intersection via inclusion-exclusion on {1,2,3} and {2,3,4}.
  F0Sketch a({0.2, 1.0 / 9.0, 100}, 3);
  for (uint64_t e : {1, 2, 3}) a.insert(e);
  const std::vector<uint64_t> b{2, 3, 4};
  const double inter =
      intersection_via_inclusion_exclusion(a.estimate(), 3.0, a.estimate_union(b));
  CHECK(inter == 2.0);
}

TEST_CASE("clone isolation: union queries never touch the base") {
  Rng rng(12);
  F0Sketch sk({0.15, 1.0 / 9.0, 1 << 20}, 8);
  for (const uint64_t e : random_distinct(1 << 20, 5000, rng)) sk.insert(e);
  const double before = sk.estimate();
  for (int q = 0; q < 10; ++q) {
    const auto offline = random_distinct(1 << 20, 500, rng);
    (void)sk.estimate_union(offline);
    CHECK(sk.estimate() == before);
  }
}

TEST_CASE("permutation and multiplicity invariance") {
  Rng rng(21);
  auto elems = random_distinct(1 << 16, 2000, rng);
  F0Sketch forward({0.1, 1.0 / 9.0, 1 << 16}, 77);
  for (uint64_t e : elems) forward.insert(e);

  std::vector<uint64_t> shuffled = elems;
  for (size_t i = shuffled.size(); i > 1; --i)
    std::swap(shuffled[i - 1], shuffled[uniform_below(rng, i)]);
  shuffled.insert(shuffled.end(), elems.begin(), elems.begin() + 500);
  F0Sketch backward({0.1, 1.0 / 9.0, 1 << 16}, 77);
  for (uint64_t e : shuffled) backward.insert(e);

  CHECK(forward.estimate() == backward.estimate());
}

TEST_CASE("relative error on a thousand distinct elements") {
  // Light version of the acceptance run: eps 0.1, true F0 = 1000.
  int hits = 0;
  const int trials = 60;
  for (int t = 0; t < trials; ++t) {
    Rng rng(1000 + t);
    F0Sketch sk({0.1, 1.0 / 9.0, 1 << 20}, 5000 + t);
    for (const uint64_t e : random_distinct(1 << 20, 1000, rng)) sk.insert(e);
    const double est = sk.estimate();
    hits += (est >= 900.0 && est <= 1100.0);
  }
  CHECK(hits >= (trials * 8) / 9);
}

TEST_CASE("union estimates track the true union") {
  int hits = 0;
  const int trials = 40;
  for (int t = 0; t < trials; ++t) {
    Rng rng(300 + t);
    const auto base = random_distinct(100000, 500, rng);
    const auto offline = random_distinct(100000, 500, rng);
    std::set<uint64_t> both(base.begin(), base.end());
    both.insert(offline.begin(), offline.end());

    F0Sketch sk({0.1, 1.0 / 9.0, 100000}, 900 + t);
    for (uint64_t e : base) sk.insert(e);
    const double est = sk.estimate_union(offline);
    const double truth = static_cast<double>(both.size());
    hits += (std::abs(est - truth) <= 0.1 * truth);
  }
  CHECK(hits >= (trials * 8) / 9);
}

TEST_CASE("union estimate statistically dominates the base") {
  int ok = 0;
  const int trials = 40;
  for (int t = 0; t < trials; ++t) {
    Rng rng(700 + t);
    F0Sketch sk({0.1, 1.0 / 9.0, 1 << 18}, 40 + t);
    for (const uint64_t e : random_distinct(1 << 18, 2000, rng)) sk.insert(e);
    const auto offline = random_distinct(1 << 18, 1000, rng);
    const double base = sk.estimate();
    const double with_union = sk.estimate_union(offline);
    ok += (with_union >= base * (1.0 - 2 * 0.1));
  }
  CHECK(ok >= (trials * 9) / 10);
}

TEST_CASE("serialization round-trips both modes") {
  Rng rng(31);
  for (size_t count : {50ULL, 5000ULL}) {
    F0Sketch sk({0.15, 1.0 / 9.0, 1 << 18}, 123);
    for (const uint64_t e : random_distinct(1 << 18, count, rng)) sk.insert(e);
    std::stringstream buf;
    sk.save(buf);
    const F0Sketch loaded = F0Sketch::load(buf);
    CHECK(loaded.exact_mode() == sk.exact_mode());
    CHECK(loaded.estimate() == sk.estimate());
  }
}
