#pragma once

#include <cstdint>
#include <vector>

#include "densestream/f0_sketch.hpp"
#include "densestream/hashing.hpp"

namespace densestream {

struct WindowParams {
  uint64_t universe_size = 0;  // padded to the next prime internally
  double eps = 0.1;            // additive error target
  double alpha = 0.1;          // density lower bound |A u B| >= alpha N
  uint64_t seed = 0;
  uint64_t window_override = 0;  // 0 = derive from eps and alpha
};

// Shared permutation-hash sample window: an affine bijection h on the
// padded prime universe, with positions h(w) < t retained. The window has
// exactly t slots and position i holds h^{-1}(i).
//
// The derived window size is t = ceil(10 / (delta^2 alpha)) with
// delta = eps/3, clamped to the universe (t = p makes the window lossless
// and every estimate exact).
class SampleWindow {
 public:
  SampleWindow(const WindowParams& params);

  uint64_t prime() const { return hash_.p; }
  uint64_t window() const { return window_; }
  double delta() const { return delta_; }
  // Slot index if the element lands in the window, else window().
  uint64_t slot(uint64_t w) const;

 private:
  uint64_t universe_size_ = 0;
  uint64_t window_ = 0;
  double delta_ = 0.0;
  PermHash hash_;
};

// Jaccard similarity from two presence bit-arrays over one shared window.
class SimilarityWindow {
 public:
  explicit SimilarityWindow(const WindowParams& params);

  void insert_a(uint64_t w);
  void insert_b(uint64_t w);

  uint64_t intersection_slots() const;  // X_cap
  uint64_t union_slots() const;         // X_cup
  double estimate() const;              // X_cap / X_cup

  const SampleWindow& window() const { return window_; }

 private:
  SampleWindow window_;
  std::vector<uint8_t> a_;
  std::vector<uint8_t> b_;
};

// k-rarity from capped per-slot counters: a slot counter sticks at k+1, so
// it ends exactly at k iff its element occurred exactly k times.
class RarityWindow {
 public:
  RarityWindow(const WindowParams& params, uint32_t k);

  void insert(uint64_t w);

  uint64_t exactly_k_slots() const;  // X_k
  uint64_t occupied_slots() const;   // X
  double estimate() const;           // X_k / X

  const SampleWindow& window() const { return window_; }

 private:
  SampleWindow window_;
  uint32_t k_ = 1;
  std::vector<uint32_t> counts_;
  std::vector<uint8_t> present_;
};

// Similarity via three distinct-elements sketches and inclusion-exclusion;
// needs no density assumption.
class SimilarityF0 {
 public:
  SimilarityF0(uint64_t universe_size, double eps, uint64_t seed);

  void insert_a(uint64_t w);
  void insert_b(uint64_t w);
  double estimate() const;

 private:
  F0Sketch sketch_a_;
  F0Sketch sketch_b_;
  F0Sketch sketch_union_;
};

}  // namespace densestream
