#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

#include "densestream/common.hpp"

namespace densestream {

struct F0Params {
  double eps_rel = 0.1;       // multiplicative error target
  double delta = 1.0 / 9.0;   // per-query failure probability
  uint64_t universe_size = 0;
};

// Distinct-elements estimator: bottom-k signatures under seeded mixing
// hashes, median over independent repetitions, with an exact element-set
// fallback while the distinct count is at most the per-repetition capacity.
//
// State depends only on the set of inserted elements. Union queries follow
// the clone-and-feed pattern: copy the sketch, insert the offline elements
// into the copy, read its estimate; the base sketch is never mutated.
//
// Capacity is ceil(5 / eps^2) per repetition (failure probability at most
// 1/5 per repetition by Chebyshev) and the repetition count grows as
// O(log 1/delta) for the median amplification.
class F0Sketch {
 public:
  F0Sketch(const F0Params& params, uint64_t seed);

  void insert(uint64_t elem);
  double estimate() const;

  F0Sketch clone() const { return *this; }

  // Estimate of |inserted set  U  offline set| consuming a one-pass stream:
  // feed(sink) must call sink(elem) once per offline element.
  template <class Feed>
  double estimate_union_stream(Feed&& feed) const {
    F0Sketch copy(*this);
    feed([&copy](uint64_t elem) { copy.insert(elem); });
    return copy.estimate();
  }

  template <class Range>
  double estimate_union(Range&& offline) const {
    F0Sketch copy(*this);
    for (uint64_t elem : offline) copy.insert(elem);
    return copy.estimate();
  }

  const F0Params& params() const { return params_; }
  size_t per_rep_capacity() const { return capacity_; }
  size_t repetitions() const { return rep_seeds_.size(); }
  bool exact_mode() const { return exact_; }
  uint64_t distinct_exact() const;  // only valid in exact mode

  // Binary snapshot of the sketch state. Layout (little-endian):
  //   u32 magic "DSF0", u32 version, f64 eps_rel, f64 delta,
  //   u64 universe, u64 seed, u8 mode (1 = exact);
  //   exact mode:  u64 count, count sorted u64 elements;
  //   sketch mode: u64 repetitions, per repetition u64 count followed by
  //                count sorted u64 signatures.
  void save(std::ostream& out) const;
  static F0Sketch load(std::istream& in);

 private:
  void materialize_reps();
  void insert_hashed(uint64_t elem);
  double rep_estimate(size_t rep) const;

  F0Params params_;
  uint64_t seed_ = 0;
  size_t capacity_ = 0;
  std::vector<uint64_t> rep_seeds_;
  bool exact_ = true;
  std::unordered_set<uint64_t> exact_set_;
  std::vector<std::set<uint64_t>> reps_;  // bottom-k hash signatures
};

// a + b - union_estimate; may be negative, callers clamp per their own
// error budget.
inline double intersection_via_inclusion_exclusion(double count_a,
                                                   double count_b,
                                                   double union_estimate) {
  return count_a + count_b - union_estimate;
}

}  // namespace densestream
