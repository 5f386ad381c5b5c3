#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace densestream {

// Bad stream record or out-of-range argument.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid parameter combination.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Enumeration or counter cap exceeded.
class CapError : public std::runtime_error {
 public:
  explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

// Query has no defined answer on this input (empty graph, empty window, ...).
class UndefinedError : public std::runtime_error {
 public:
  explicit UndefinedError(const std::string& what) : std::runtime_error(what) {}
};

using Rng = std::mt19937_64;

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Fixed 64-bit mixing finalizer (splitmix64 tail).
inline uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Unbiased uniform draw from [0, bound). Avoids std::uniform_int_distribution
// so results are identical across standard libraries.
inline uint64_t uniform_below(Rng& rng, uint64_t bound) {
  const uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

inline double uniform_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Order on bit-vector solutions that compares vertex 0 first (bit 0 = vertex 0).
// Used to break argmax ties reproducibly.
inline bool solution_lex_less(uint64_t a, uint64_t b) {
  if (a == b) return false;
  const int i = __builtin_ctzll(a ^ b);
  return ((a >> i) & 1ULL) == 0;
}

}  // namespace densestream
