#include "densestream/expander.hpp"

#include <cmath>

namespace densestream {

ExpanderGraph::ExpanderGraph(uint64_t universe_size, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw ConfigError("expander spectral target must lie in (0, 1)");
  if (universe_size == 0) throw ConfigError("expander universe must be nonempty");
  side_ = static_cast<uint64_t>(std::ceil(std::sqrt(static_cast<double>(universe_size))));
  if (side_ < 2) side_ = 2;
  while (side_ * side_ < universe_size) ++side_;  // guard rounding
  power_ = 1;
  lambda_bound_ = kBaseLambda;
  while (lambda_bound_ > lambda) {
    ++power_;
    lambda_bound_ *= kBaseLambda;
  }
}

uint64_t ExpanderGraph::base_step(uint64_t v, uint32_t direction) const {
  const uint64_t s = side_;
  uint64_t x = v / s, y = v % s;
  const uint64_t x2 = (2 * x) % s, y2 = (2 * y) % s;
  switch (direction) {
    case 0: x = (x + y2) % s; break;              // T1
    case 1: x = (x + y2 + 1) % s; break;          // T1 + e1
    case 2: y = (y + x2) % s; break;              // T2
    case 3: y = (y + x2 + 1) % s; break;          // T2 + e2
    case 4: x = (x + s - y2) % s; break;          // T1^-1
    case 5: x = (x + 2 * s - y2 - 1) % s; break;  // (T1 + e1)^-1
    case 6: y = (y + s - x2) % s; break;          // T2^-1
    case 7: y = (y + 2 * s - x2 - 1) % s; break;  // (T2 + e2)^-1
    default: throw InputError("expander step direction out of range");
  }
  return x * s + y;
}

uint64_t ExpanderGraph::step(uint64_t v, std::span<const uint8_t> digits) const {
  for (uint8_t d : digits) v = base_step(v, d);
  return v;
}

}  // namespace densestream
