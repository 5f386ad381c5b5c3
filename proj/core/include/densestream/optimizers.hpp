#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "densestream/universe.hpp"

namespace densestream {

enum class Variant { kF0, kSampler };

struct DenseRunConfig {
  uint32_t n = 0;       // vertex / variable count
  double eps = 0.1;     // approximation target
  double alpha = 0.1;   // density lower bound (m >= alpha n^2, resp. alpha n^k)
  Variant variant = Variant::kF0;
  uint64_t seed = 0;

  // Sampler-variant knobs; 0 keeps the defaults derived from eps and alpha.
  uint64_t sampler_walk_override = 0;
  double sampler_lambda_override = 0.0;
  bool sampler_exhaustive = false;  // test hook: exact exhaustive "walk"

  bool collect_queries = false;  // record one row per candidate solution
};

// One candidate solution and the estimate the argmax saw for it. For cuts
// the estimate is the raw crossing-count estimate, for subsets the density
// estimate, for CSP assignments the normalized value; solution is the cut
// bitmask, subset bitmask, or base-q assignment index respectively.
struct QueryRow {
  uint64_t solution = 0;
  double estimate = 0.0;
};

struct MaxCutResult {
  Cut cut;
  double value_estimate = 0.0;  // normalized, clamped to [0, 1]
  double edge_count_estimate = 0.0;
  bool density_warning = false;
  std::vector<QueryRow> queries;
};

struct DensestResult {
  uint32_t n = 0;
  uint64_t subset = 0;
  double density_estimate = 0.0;
  uint64_t edge_count = 0;
  bool density_warning = false;
  std::vector<QueryRow> queries;
};

struct CspResult {
  std::vector<uint8_t> assignment;
  double value_estimate = 0.0;  // normalized, clamped to [0, 1]
  uint64_t constraint_count = 0;
  bool density_warning = false;
  std::vector<QueryRow> queries;
};

// (1-eps)-approximate Max-Cut on a one-pass edge stream (encoded indices).
// The F0 variant keeps one sketch for the distinct edge count and one
// union sketch queried per cut by the clone-and-feed pattern; the sampler
// variant estimates every cut value from one expander-walk sample.
MaxCutResult maxcut_dense(std::span<const uint64_t> stream,
                          const DenseRunConfig& config);

// (1-eps)-approximate densest subgraph; the search is restricted to
// subsets with |S| >= m/n, which always contain an optimum.
DensestResult densest_dense(std::span<const uint64_t> stream,
                            const DenseRunConfig& config);

// (1-eps) * maxval approximation for Max-CSP over a one-pass stream of
// encoded constraints.
CspResult csp_dense(std::span<const uint64_t> stream, const CspShape& shape,
                    const DenseRunConfig& config);

// Exhaustive oracles. Ties break toward the lexicographically smallest
// solution (vertex 0 first for cuts and assignments, member-list order for
// subsets).
std::pair<Cut, double> maxcut_brute(const Graph& g);                  // n <= 24
std::pair<uint64_t, double> densest_brute(const Graph& g);            // n <= 20
std::pair<std::vector<uint8_t>, double> csp_brute(const CspInstance& phi);

// Member-list lexicographic order on vertex subsets: {0} < {0,1} < {1}.
bool subset_lex_less(uint64_t a, uint64_t b);

}  // namespace densestream
