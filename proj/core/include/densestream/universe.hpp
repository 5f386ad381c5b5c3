#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "densestream/common.hpp"

namespace densestream {

// Bijection between unordered vertex pairs on [n] and [0, n(n-1)/2),
// ordered lexicographically on (min, max). Shared element universe for
// every edge-stream sketch in this library.
class EdgeUniverse {
 public:
  explicit EdgeUniverse(uint32_t n);

  uint32_t vertex_count() const { return n_; }
  uint64_t size() const { return size_; }

  uint64_t encode(uint32_t u, uint32_t v) const;
  std::pair<uint32_t, uint32_t> decode(uint64_t index) const;

 private:
  uint32_t n_;
  uint64_t size_;
};

// Vertex bipartition for n <= 64; bit i is the side of vertex i.
struct Cut {
  uint32_t n = 0;
  uint64_t bits = 0;

  uint32_t ones() const { return static_cast<uint32_t>(std::popcount(mask())); }
  uint64_t mask() const {
    return n >= 64 ? bits : bits & ((1ULL << n) - 1);
  }
  Cut complement() const {
    return Cut{n, ~bits & (n >= 64 ? ~0ULL : (1ULL << n) - 1)};
  }
  bool crosses(uint32_t u, uint32_t v) const {
    return (((bits >> u) ^ (bits >> v)) & 1ULL) != 0;
  }
};

// Number of complete-graph edges crossing the cut: s(n-s).
uint64_t crossing_count(const Cut& x);

// Streams the encoded indices of all crossing edges without materializing
// the set. fn receives each index once, in increasing order.
template <class Fn>
void for_each_crossing(const Cut& x, const EdgeUniverse& universe, Fn&& fn) {
  const uint32_t n = universe.vertex_count();
  for (uint32_t u = 0; u + 1 < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      if (x.crosses(u, v)) fn(universe.encode(u, v));
    }
  }
}

std::vector<uint64_t> crossing_set(const Cut& x, const EdgeUniverse& universe);

// Undirected graph as a multiset of encoded edge indices in arrival order.
struct Graph {
  uint32_t n = 0;
  std::vector<uint64_t> edges;

  static Graph from_pairs(uint32_t n,
                          std::span<const std::pair<uint32_t, uint32_t>> pairs);

  EdgeUniverse universe() const { return EdgeUniverse(n); }
  // Sorted, deduplicated edge indices.
  std::vector<uint64_t> distinct_edges() const;
  uint64_t distinct_count() const { return distinct_edges().size(); }
};

// Fraction of distinct edges crossing the cut. Repeated edges count once.
double cut_value(const Graph& g, const Cut& x);

// ---- Max-CSP over [q]^k predicates ------------------------------------

struct CspShape {
  uint32_t n = 0;  // variable count
  uint32_t k = 2;  // arity
  uint32_t q = 2;  // alphabet size

  uint64_t point_count() const;      // q^k
  uint64_t table_count() const;      // 2^(q^k)
  uint64_t tuple_count() const;      // n (n-1) ... (n-k+1)
  uint64_t universe_size() const;    // tuple_count * table_count
};

// A constraint is an injective variable tuple plus a predicate truth table
// of length q^k (index = tuple-ordered base-q digits, first variable most
// significant).
struct Constraint {
  std::vector<uint32_t> vars;
  std::vector<uint8_t> table;
};

uint64_t encode_constraint(const Constraint& c, const CspShape& shape);
Constraint decode_constraint(uint64_t index, const CspShape& shape);

bool constraint_satisfied(const Constraint& c, std::span<const uint8_t> x,
                          uint32_t q);

struct CspInstance {
  CspShape shape;
  std::vector<Constraint> constraints;
};

// Fraction of distinct constraints satisfied by x. Duplicates count once.
double csp_value(const CspInstance& phi, std::span<const uint8_t> x);

// Max-Cut edge {u,v} as the arity-2 disequality constraint over {0,1}.
Constraint maxcut_constraint(uint32_t u, uint32_t v);
CspInstance maxcut_as_csp(const Graph& g);

}  // namespace densestream
