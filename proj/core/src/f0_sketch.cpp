#include "densestream/f0_sketch.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

namespace densestream {

namespace {

constexpr double kCapacityConstant = 5.0;
constexpr uint32_t kSerialMagic = 0x44534630;  // "DSF0"
constexpr uint32_t kSerialVersion = 1;

size_t capacity_for(double eps) {
  const double raw = std::ceil(kCapacityConstant / (eps * eps));
  return static_cast<size_t>(std::max(8.0, raw));
}

size_t repetitions_for(double delta) {
  // Median amplification: per-rep failure 1/5, Hoeffding margin 3/10.
  const size_t half = static_cast<size_t>(std::ceil(4.0 * std::log(1.0 / delta)));
  return 2 * std::max<size_t>(half, 1) + 1;
}

template <class T>
void write_pod(std::ostream& out, const T& value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T read_pod(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw InputError("truncated sketch state");
  return value;
}

}  // namespace

F0Sketch::F0Sketch(const F0Params& params, uint64_t seed)
    : params_(params), seed_(seed) {
  if (!(params.eps_rel > 0.0 && params.eps_rel < 1.0))
    throw ConfigError("f0 sketch eps_rel must lie in (0, 1)");
  if (!(params.delta > 0.0 && params.delta < 1.0))
    throw ConfigError("f0 sketch delta must lie in (0, 1)");
  if (params.universe_size == 0)
    throw ConfigError("f0 sketch universe must be nonempty");
  capacity_ = capacity_for(params.eps_rel);
  const size_t reps = repetitions_for(params.delta);
  rep_seeds_.resize(reps);
  uint64_t state = seed;
  for (auto& s : rep_seeds_) s = splitmix64(state);
}

void F0Sketch::insert(uint64_t elem) {
  if (elem >= params_.universe_size)
    throw InputError("f0 insert: element outside the universe");
  if (exact_) {
    exact_set_.insert(elem);
    if (exact_set_.size() > capacity_) materialize_reps();
    return;
  }
  insert_hashed(elem);
}

void F0Sketch::materialize_reps() {
  reps_.assign(rep_seeds_.size(), {});
  exact_ = false;
  for (uint64_t elem : exact_set_) insert_hashed(elem);
  exact_set_.clear();
}

void F0Sketch::insert_hashed(uint64_t elem) {
  for (size_t r = 0; r < reps_.size(); ++r) {
    auto& bottom = reps_[r];
    const uint64_t h = mix64(elem ^ rep_seeds_[r]);
    if (bottom.size() < capacity_) {
      bottom.insert(h);
    } else if (h < *bottom.rbegin()) {
      if (bottom.insert(h).second) bottom.erase(std::prev(bottom.end()));
    }
  }
}

double F0Sketch::rep_estimate(size_t rep) const {
  const auto& bottom = reps_[rep];
  if (bottom.size() < capacity_) return static_cast<double>(bottom.size());
  // k-th smallest hash as a (0,1] fraction of the hash range.
  const double kth = (static_cast<double>(*bottom.rbegin()) + 1.0) * 0x1.0p-64;
  return static_cast<double>(capacity_ - 1) / kth;
}

double F0Sketch::estimate() const {
  if (exact_) return static_cast<double>(exact_set_.size());
  std::vector<double> ests(reps_.size());
  for (size_t r = 0; r < reps_.size(); ++r) ests[r] = rep_estimate(r);
  auto mid = ests.begin() + static_cast<ptrdiff_t>(ests.size() / 2);
  std::nth_element(ests.begin(), mid, ests.end());
  return *mid;
}

uint64_t F0Sketch::distinct_exact() const {
  if (!exact_) throw UndefinedError("sketch left exact mode");
  return exact_set_.size();
}

void F0Sketch::save(std::ostream& out) const {
  write_pod(out, kSerialMagic);
  write_pod(out, kSerialVersion);
  write_pod(out, params_.eps_rel);
  write_pod(out, params_.delta);
  write_pod(out, params_.universe_size);
  write_pod(out, seed_);
  write_pod(out, static_cast<uint8_t>(exact_ ? 1 : 0));
  if (exact_) {
    std::vector<uint64_t> sorted(exact_set_.begin(), exact_set_.end());
    std::sort(sorted.begin(), sorted.end());
    write_pod(out, static_cast<uint64_t>(sorted.size()));
    for (uint64_t v : sorted) write_pod(out, v);
    return;
  }
  write_pod(out, static_cast<uint64_t>(reps_.size()));
  for (const auto& bottom : reps_) {
    write_pod(out, static_cast<uint64_t>(bottom.size()));
    for (uint64_t h : bottom) write_pod(out, h);  // std::set iterates sorted
  }
}

F0Sketch F0Sketch::load(std::istream& in) {
  if (read_pod<uint32_t>(in) != kSerialMagic)
    throw InputError("not a serialized f0 sketch");
  if (read_pod<uint32_t>(in) != kSerialVersion)
    throw InputError("unsupported sketch version");
  F0Params params;
  params.eps_rel = read_pod<double>(in);
  params.delta = read_pod<double>(in);
  params.universe_size = read_pod<uint64_t>(in);
  const uint64_t seed = read_pod<uint64_t>(in);
  F0Sketch sk(params, seed);
  const bool exact = read_pod<uint8_t>(in) != 0;
  if (exact) {
    const uint64_t count = read_pod<uint64_t>(in);
    for (uint64_t i = 0; i < count; ++i) sk.exact_set_.insert(read_pod<uint64_t>(in));
    return sk;
  }
  sk.exact_ = false;
  const uint64_t reps = read_pod<uint64_t>(in);
  if (reps != sk.rep_seeds_.size()) throw InputError("sketch repetition mismatch");
  sk.reps_.assign(reps, {});
  for (auto& bottom : sk.reps_) {
    const uint64_t count = read_pod<uint64_t>(in);
    for (uint64_t i = 0; i < count; ++i) bottom.insert(read_pod<uint64_t>(in));
  }
  return sk;
}

}  // namespace densestream
