#include "densestream/simrare.hpp"

#include <algorithm>
#include <cmath>

namespace densestream {

SampleWindow::SampleWindow(const WindowParams& params)
    : universe_size_(params.universe_size) {
  if (params.universe_size < 2) throw ConfigError("window universe too small");
  if (!(params.eps > 0.0 && params.eps < 1.0))
    throw ConfigError("window eps must lie in (0, 1)");
  if (!(params.alpha > 0.0 && params.alpha <= 1.0))
    throw ConfigError("window alpha must lie in (0, 1]");
  const uint64_t p = next_prime(params.universe_size);
  delta_ = params.eps / 3.0;
  if (params.window_override > 0) {
    window_ = std::min(params.window_override, p);
  } else {
    // The Chebyshev budget needs t >= 10 / (delta^2 alpha).
    const double t = std::ceil(10.0 / (delta_ * delta_ * params.alpha));
    window_ = std::min(static_cast<uint64_t>(t), p);
  }
  Rng rng(params.seed);
  hash_ = sample_perm_hash(p, rng);
}

uint64_t SampleWindow::slot(uint64_t w) const {
  if (w >= universe_size_)
    throw InputError("window insert: element outside the universe");
  const uint64_t h = hash_(w);
  return h < window_ ? h : window_;
}

SimilarityWindow::SimilarityWindow(const WindowParams& params)
    : window_(params), a_(window_.window(), 0), b_(window_.window(), 0) {}

void SimilarityWindow::insert_a(uint64_t w) {
  const uint64_t s = window_.slot(w);
  if (s < a_.size()) a_[s] = 1;
}

void SimilarityWindow::insert_b(uint64_t w) {
  const uint64_t s = window_.slot(w);
  if (s < b_.size()) b_[s] = 1;
}

uint64_t SimilarityWindow::intersection_slots() const {
  uint64_t c = 0;
  for (size_t i = 0; i < a_.size(); ++i) c += (a_[i] & b_[i]);
  return c;
}

uint64_t SimilarityWindow::union_slots() const {
  uint64_t c = 0;
  for (size_t i = 0; i < a_.size(); ++i) c += (a_[i] | b_[i]);
  return c;
}

double SimilarityWindow::estimate() const {
  const uint64_t x_cup = union_slots();
  if (x_cup == 0) throw UndefinedError("similarity window saw no elements");
  return static_cast<double>(intersection_slots()) / static_cast<double>(x_cup);
}

RarityWindow::RarityWindow(const WindowParams& params, uint32_t k)
    : window_(params),
      k_(k),
      counts_(window_.window(), 0),
      present_(window_.window(), 0) {
  if (k == 0) throw ConfigError("rarity multiplicity k must be positive");
}

void RarityWindow::insert(uint64_t w) {
  const uint64_t s = window_.slot(w);
  if (s >= counts_.size()) return;
  if (counts_[s] <= k_) ++counts_[s];  // saturates at k+1
  present_[s] = 1;
}

uint64_t RarityWindow::exactly_k_slots() const {
  uint64_t c = 0;
  for (uint32_t v : counts_) c += (v == k_);
  return c;
}

uint64_t RarityWindow::occupied_slots() const {
  uint64_t c = 0;
  for (uint8_t v : present_) c += v;
  return c;
}

double RarityWindow::estimate() const {
  const uint64_t x = occupied_slots();
  if (x == 0) throw UndefinedError("rarity window saw no elements");
  return static_cast<double>(exactly_k_slots()) / static_cast<double>(x);
}

namespace {

F0Params three_sketch_params(uint64_t universe_size, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw ConfigError("similarity eps must lie in (0, 1)");
  return F0Params{eps / 4.0, 1.0 / 9.0, universe_size};
}

}  // namespace

SimilarityF0::SimilarityF0(uint64_t universe_size, double eps, uint64_t seed)
    : sketch_a_(three_sketch_params(universe_size, eps), mix64(seed ^ 0x61)),
      sketch_b_(three_sketch_params(universe_size, eps), mix64(seed ^ 0x62)),
      sketch_union_(three_sketch_params(universe_size, eps), mix64(seed ^ 0x63)) {}

void SimilarityF0::insert_a(uint64_t w) {
  sketch_a_.insert(w);
  sketch_union_.insert(w);
}

void SimilarityF0::insert_b(uint64_t w) {
  sketch_b_.insert(w);
  sketch_union_.insert(w);
}

double SimilarityF0::estimate() const {
  const double f_union = sketch_union_.estimate();
  if (f_union <= 0.0) throw UndefinedError("similarity of an empty union");
  const double f_cap = intersection_via_inclusion_exclusion(
      sketch_a_.estimate(), sketch_b_.estimate(), f_union);
  return f_cap / f_union;
}

}  // namespace densestream
