#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "densestream/hardlab.hpp"
#include "densestream/universe.hpp"

namespace densestream {

// Text stream format, one record per line:
//   e U V    edge insertion between vertices U and V
//   a X      insertion of X into set A (similarity)
//   b X      insertion of X into set B (similarity)
//   r X      untagged element insertion (rarity, f0, sample)
//   c ID     encoded CSP constraint
//   # ...    comment
// Vertex and element labels may be arbitrary nonnegative integers; they are
// remapped to dense 0-based ids in file order (vertices and elements
// separately). Constraint ids are taken verbatim.
enum class RecordKind : uint8_t { kEdge, kSetA, kSetB, kElement, kConstraint };

struct StreamRecord {
  RecordKind kind = RecordKind::kElement;
  uint64_t a = 0;
  uint64_t b = 0;  // second endpoint for edges
};

struct StreamFile {
  std::vector<StreamRecord> records;
  uint32_t vertex_count = 0;   // dense ids used by edge records
  uint64_t element_count = 0;  // dense ids used by a/b/r records

  std::vector<uint64_t> encoded_edges(uint32_t n) const;
  std::vector<uint64_t> constraint_ids() const;
};

StreamFile parse_stream(std::istream& in);
void write_stream(std::ostream& out, const StreamFile& stream);

// ---- Generators (deterministic per seed) ----------------------------------

StreamFile gen_erdos_renyi(uint32_t n, double density, uint64_t seed);
// Complete bipartite Bip(S) for a random S of the given size.
StreamFile gen_bip(uint32_t n, uint32_t side_size, uint64_t seed);
// Clique on a random subset plus Erdos-Renyi noise.
StreamFile gen_planted_clique(uint32_t n, uint32_t clique_size,
                              double noise_density, uint64_t seed);
// k-right-regular bipartite graph as edges on [2n) (right side offset by n).
StreamFile gen_grr(uint32_t n, uint32_t k, uint64_t seed);
StreamFile gen_matching_union(uint32_t n, uint32_t k, uint64_t seed);
// m distinct uniform constraints.
StreamFile gen_csp_random(const CspShape& shape, uint64_t m, uint64_t seed);
// `distinct` elements with multiplicities uniform in [1, max_multiplicity],
// shuffled.
StreamFile gen_multiplicity_profile(uint64_t universe, uint64_t distinct,
                                    uint32_t max_multiplicity, uint64_t seed);
StreamFile gen_distinct(uint64_t universe, uint64_t count, uint64_t seed);
// Two sets with the given union size and approximate Jaccard similarity.
StreamFile gen_similarity(uint64_t universe, uint64_t union_size,
                          double jaccard, uint64_t seed);

// ---- Run reports ------------------------------------------------------------

// Fixed CSV header; unknown fields stay empty so reports are byte-identical
// for identical (subcommand, flags, seed). Wall time is filled only when
// timing is requested.
inline constexpr const char* kReportHeader =
    "algorithm,n,k,q,eps,alpha,variant,seed,trial,solution,estimate,oracle,"
    "success,wall_ms";

struct ReportRow {
  std::string algorithm;
  std::optional<uint64_t> n, k, q;
  std::optional<double> eps, alpha;
  std::optional<std::string> variant;
  uint64_t seed = 0;
  std::optional<uint64_t> trial;
  std::optional<std::string> solution;
  std::optional<double> estimate;
  std::optional<double> oracle;
  std::optional<bool> success;
  std::optional<double> wall_ms;
};

void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const ReportRow& row);

std::string format_cut_solution(const Cut& cut);
std::string format_subset_solution(uint64_t mask);
std::string format_assignment_solution(const std::vector<uint8_t>& assignment);

// FNV-1a over an edge list; used to tag experiment instances in CSVs.
uint64_t instance_hash(const BipartiteInstance& g);
uint64_t instance_hash(const Graph& g);

}  // namespace densestream
