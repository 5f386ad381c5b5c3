#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "densestream/expander.hpp"
#include "densestream/hashing.hpp"

namespace densestream {

struct SamplerConfig {
  uint64_t universe_size = 0;    // N; padded internally to a square M >= N
  uint64_t walk_length = 0;      // t
  double lambda = 0.1;           // spectral target for the expander
  int32_t multiplicity_cap = 255;  // B; exceeding it rejects the stream
  uint64_t seed = 0;
};

// Pre-stream expander-walk subsampler for dense streams.
//
// Before the stream: a length-t random walk over the (square-padded)
// element universe, kept implicitly as a start vertex plus per-step
// direction digits. During the stream: per-walk-position multiplicity
// counters, maintained chunk-by-chunk via two pairwise-independent bucket
// structures (insertions and deletions); the batching is an efficiency
// device only and the counters match a per-update scan exactly. After the
// stream: the weighted sample sigma holds max(c_j, 0) copies of w_j and
// estimates the mean of any f : universe -> [0,1] over the stream multiset.
//
// Padded vertices never occur in streams and carry f = 0, so the estimator
// and its density threshold use the padded vertex count M in place of N.
class DenseSampler {
 public:
  explicit DenseSampler(const SamplerConfig& config);

  // Test hook: replaces the walk by one exhaustive pass over all padded
  // vertices, making estimates exact for multiplicity-1 streams.
  static DenseSampler exhaustive(uint64_t universe_size, uint64_t seed = 0,
                                 int32_t multiplicity_cap = 255);

  void insert(uint64_t elem) { push(elem, +1); }
  void remove(uint64_t elem) { push(elem, -1); }

  // Flushes any buffered updates and freezes the weighted sample.
  void finalize();
  bool finalized() const { return finalized_; }

  int64_t stream_size() const { return stream_size_; }
  uint64_t padded_universe() const { return expander_.num_vertices(); }
  uint64_t chunk_size() const { return chunk_size_; }

  // (M / (t |stream|)) * sum over sigma of f; requires a finalized,
  // nonempty stream.
  double estimate(const std::function<double(uint64_t)>& f) const;

  const std::vector<uint64_t>& walk() const { return walk_; }
  const std::vector<int32_t>& counters() const { return counters_; }
  uint64_t walk_start() const { return walk_start_; }
  const std::vector<uint8_t>& step_digits() const { return step_digits_; }
  // Compressed sigma: (element, total weight) pairs, sorted by element.
  const std::vector<std::pair<uint64_t, int64_t>>& sample_weights() const;

 private:
  void push(uint64_t elem, int32_t sign);
  void process_chunk();

  ExpanderGraph expander_;
  uint64_t universe_size_ = 0;
  int32_t cap_ = 255;
  bool exhaustive_ = false;
  bool finalized_ = false;

  uint64_t walk_start_ = 0;
  std::vector<uint8_t> step_digits_;  // (t-1) * power() base-8 digits
  std::vector<uint64_t> walk_;
  std::vector<int32_t> counters_;
  int64_t stream_size_ = 0;

  uint64_t chunk_size_ = 1;
  BucketHash insert_hash_;
  BucketHash delete_hash_;
  std::vector<std::pair<uint64_t, int32_t>> pending_;
  std::vector<std::vector<uint64_t>> insert_buckets_;
  std::vector<std::vector<uint64_t>> delete_buckets_;

  std::vector<std::pair<uint64_t, int64_t>> sigma_;
};

}  // namespace densestream
