#include "densestream/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace densestream {

DenseSampler::DenseSampler(const SamplerConfig& config)
    : expander_(config.universe_size, config.lambda),
      universe_size_(config.universe_size),
      cap_(config.multiplicity_cap) {
  if (config.walk_length == 0) throw ConfigError("sampler walk length must be positive");
  if (config.multiplicity_cap < 1)
    throw ConfigError("sampler multiplicity cap must be positive");

  Rng rng(config.seed);
  const uint64_t t = config.walk_length;
  const uint64_t vertices = expander_.num_vertices();

  walk_start_ = uniform_below(rng, vertices);
  walk_.reserve(t);
  walk_.push_back(walk_start_);
  step_digits_.resize((t - 1) * expander_.power());
  uint64_t v = walk_start_;
  for (uint64_t i = 0; i + 1 < t; ++i) {
    uint8_t* digits = step_digits_.data() + i * expander_.power();
    for (uint32_t j = 0; j < expander_.power(); ++j)
      digits[j] = static_cast<uint8_t>(uniform_below(rng, ExpanderGraph::kBaseDegree));
    v = expander_.step(v, {digits, expander_.power()});
    walk_.push_back(v);
  }
  counters_.assign(t, 0);

  const double log2m = std::log2(static_cast<double>(vertices));
  chunk_size_ = std::max<uint64_t>(
      1, static_cast<uint64_t>(std::ceil(static_cast<double>(t) / log2m)));
  insert_hash_ = sample_bucket_hash(2 * chunk_size_, rng);
  delete_hash_ = sample_bucket_hash(2 * chunk_size_, rng);
  insert_buckets_.resize(2 * chunk_size_);
  delete_buckets_.resize(2 * chunk_size_);
  pending_.reserve(chunk_size_);
}

DenseSampler DenseSampler::exhaustive(uint64_t universe_size, uint64_t seed,
                                      int32_t multiplicity_cap) {
  SamplerConfig config;
  config.universe_size = universe_size;
  config.walk_length = 1;  // placeholder; the walk is replaced below
  config.lambda = ExpanderGraph::kBaseLambda;
  config.multiplicity_cap = multiplicity_cap;
  config.seed = seed;
  DenseSampler s(config);
  const uint64_t vertices = s.expander_.num_vertices();
  s.exhaustive_ = true;
  s.walk_start_ = 0;
  s.step_digits_.clear();
  s.walk_.resize(vertices);
  for (uint64_t v = 0; v < vertices; ++v) s.walk_[v] = v;
  s.counters_.assign(vertices, 0);
  const double log2m = std::log2(static_cast<double>(vertices));
  s.chunk_size_ = std::max<uint64_t>(
      1, static_cast<uint64_t>(std::ceil(static_cast<double>(vertices) / log2m)));
  s.insert_buckets_.assign(2 * s.chunk_size_, {});
  s.delete_buckets_.assign(2 * s.chunk_size_, {});
  s.insert_hash_.buckets = 2 * s.chunk_size_;
  s.delete_hash_.buckets = 2 * s.chunk_size_;
  return s;
}

void DenseSampler::push(uint64_t elem, int32_t sign) {
  if (finalized_) throw ConfigError("sampler already finalized");
  if (elem >= universe_size_)
    throw InputError("sampler update: element outside the universe");
  stream_size_ += sign;
  pending_.emplace_back(elem, sign);
  if (pending_.size() >= chunk_size_) process_chunk();
}

void DenseSampler::process_chunk() {
  if (pending_.empty()) return;
  for (const auto& [elem, sign] : pending_) {
    if (sign > 0) {
      insert_buckets_[insert_hash_(elem)].push_back(elem);
    } else {
      delete_buckets_[delete_hash_(elem)].push_back(elem);
    }
  }
  for (size_t j = 0; j < walk_.size(); ++j) {
    const uint64_t w = walk_[j];
    int32_t net = 0;
    for (uint64_t e : insert_buckets_[insert_hash_(w)]) net += (e == w);
    for (uint64_t e : delete_buckets_[delete_hash_(w)]) net -= (e == w);
    if (net == 0) continue;
    counters_[j] += net;
    if (counters_[j] > cap_) {
      throw CapError("sampler multiplicity cap " + std::to_string(cap_) +
                     " exceeded by element " + std::to_string(w));
    }
  }
  for (const auto& [elem, sign] : pending_) {
    auto& buckets = sign > 0 ? insert_buckets_ : delete_buckets_;
    const auto& hash = sign > 0 ? insert_hash_ : delete_hash_;
    buckets[hash(elem)].clear();
  }
  pending_.clear();
}

void DenseSampler::finalize() {
  if (finalized_) return;
  process_chunk();
  finalized_ = true;
  std::map<uint64_t, int64_t> totals;
  for (size_t j = 0; j < walk_.size(); ++j) {
    if (counters_[j] > 0) totals[walk_[j]] += counters_[j];
  }
  sigma_.assign(totals.begin(), totals.end());
}

const std::vector<std::pair<uint64_t, int64_t>>& DenseSampler::sample_weights()
    const {
  if (!finalized_) throw ConfigError("sampler not finalized");
  return sigma_;
}

double DenseSampler::estimate(const std::function<double(uint64_t)>& f) const {
  if (!finalized_) throw ConfigError("sampler not finalized");
  if (stream_size_ <= 0) throw UndefinedError("mean over an empty stream");
  double sum = 0.0;
  for (const auto& [elem, weight] : sigma_) sum += static_cast<double>(weight) * f(elem);
  const double m = static_cast<double>(expander_.num_vertices());
  const double t = static_cast<double>(walk_.size());
  return m / (t * static_cast<double>(stream_size_)) * sum;
}

}  // namespace densestream
