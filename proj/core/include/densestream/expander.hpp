#pragma once

#include <cstdint>
#include <span>

#include "densestream/common.hpp"

namespace densestream {

// Strongly explicit regular expander covering a universe of N elements.
//
// Base family: the Margulis-Gabber-Galil degree-8 multigraph on Z_s x Z_s
// (s minimal with s^2 >= N), whose nontrivial normalized eigenvalues are
// bounded by lambda0 = 5*sqrt(2)/8 < 0.89 in absolute value. Arbitrary
// spectral targets are reached by walk-powering: one logical step is r base
// steps, giving degree 8^r and bound lambda0^r. Neighbors are computed in
// O(r) arithmetic with no stored adjacency.
class ExpanderGraph {
 public:
  static constexpr double kBaseLambda = 0.883883476483184406;  // 5*sqrt(2)/8
  static constexpr uint32_t kBaseDegree = 8;

  ExpanderGraph(uint64_t universe_size, double lambda);

  uint64_t num_vertices() const { return side_ * side_; }
  uint64_t side() const { return side_; }
  uint32_t power() const { return power_; }  // base steps per logical step
  double lambda_bound() const { return lambda_bound_; }

  // One base step; direction in [0, 8). The eight maps come in inverse
  // pairs, so the neighbor multiset is symmetric.
  uint64_t base_step(uint64_t v, uint32_t direction) const;
  // One logical step: power() base-8 digits.
  uint64_t step(uint64_t v, std::span<const uint8_t> digits) const;

 private:
  uint64_t side_ = 2;
  uint32_t power_ = 1;
  double lambda_bound_ = kBaseLambda;
};

}  // namespace densestream
