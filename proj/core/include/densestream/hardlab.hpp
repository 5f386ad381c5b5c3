#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "densestream/universe.hpp"

namespace densestream {

// Bipartite graph with an explicit edge multiset; left and right vertices
// are indexed independently from 0.
struct BipartiteInstance {
  uint32_t left_size = 0;
  uint32_t right_size = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;

  std::vector<uint32_t> left_degrees() const;
  std::vector<uint32_t> right_degrees() const;
  bool right_regular(uint32_t k) const;
  uint64_t edge_count() const { return edges.size(); }
};

// General multigraph used by the augmentation gadgets.
struct Multigraph {
  uint32_t n = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
};

struct WeightedEdge {
  uint32_t u = 0;
  uint32_t v = 0;
  int64_t w = 1;
};

struct WeightedGraph {
  uint32_t n = 0;
  std::vector<WeightedEdge> edges;
};

// Tunable knobs of the hard-family construction. The defaults mirror the
// regime the construction is analyzed in; at desk scale the high-probability
// statements are reported empirically rather than asserted.
struct HardFamilyParams {
  double eta_near = 1e-8;
  double eta_tail = 1.0 / 8000.0;
  double c_deg = 10.0;
  double c_size = 1.0;     // non-normative default
  double c_stretch = 1.0;  // non-normative default
  double c_den = 1e6;
  double rho = 1e-6;

  // Slack threshold for n right vertices and right-degree k.
  static double tau(uint32_t n, uint32_t k);
};

// ---- Conditional Max-Cut calculus --------------------------------------
// Left assignments x and right assignments y take values in {-1, +1}.

// Signed sum of x over the neighbors of right vertex v (with multiplicity).
int64_t disc(const BipartiteInstance& g, std::span<const int8_t> x, uint32_t v);

double cval(const BipartiteInstance& g, std::span<const int8_t> x,
            std::span<const int8_t> y);
double copt(const BipartiteInstance& g, std::span<const int8_t> x);
double closs(const BipartiteInstance& g, std::span<const int8_t> x,
             std::span<const int8_t> y);

// |a| + |b| - |a+b|: the slack of the triangle inequality. Nonnegative;
// zero iff a and b agree in sign or either is zero.
double slack(double a, double b);
int64_t slack(int64_t a, int64_t b);

double advantage(const BipartiteInstance& g1, const BipartiteInstance& g2,
                 std::span<const int8_t> x, uint32_t v);

struct SharedGoodResult {
  bool exists = false;
  // A shared tau-good assignment when one exists, otherwise the
  // closed-form minimizer of closs1 + closs2.
  std::vector<int8_t> witness;
  double min_total_loss = 0.0;  // = advantage_sum / 2
  double advantage_sum = 0.0;
};

// Decides whether some right assignment is tau-good for both instances
// simultaneously: exhaustively for right_size <= 20, with the closed-form
// minimizer of the total loss returned as witness.
SharedGoodResult check_shared_good(const BipartiteInstance& g1,
                                   const BipartiteInstance& g2,
                                   std::span<const int8_t> x, double tau);

// ---- Instance generators -------------------------------------------------

// Each right vertex picks a uniform k-subset of the left side.
BipartiteInstance grr_sample(uint32_t n, uint32_t k, Rng& rng);

// Union of k uniform random perfect matchings; multiplicities kept.
BipartiteInstance matching_union_sample(uint32_t n, uint32_t k, Rng& rng);

struct FamilyFilterStats {
  uint64_t candidates = 0;
  uint64_t degree_violations = 0;
  uint64_t tail_violations = 0;
  uint64_t overlap_removals = 0;
};

uint64_t tail_degree(const BipartiteInstance& g, uint32_t threshold);
uint64_t edge_overlap(const BipartiteInstance& g1, const BipartiteInstance& g2);

// Deletion method: drops graphs violating the squared-degree or tail
// bounds, then one graph of every pair with excessive edge overlap.
std::pair<std::vector<BipartiteInstance>, FamilyFilterStats> hard_family_filter(
    std::vector<BipartiteInstance> candidates, uint32_t k,
    const HardFamilyParams& params);

// ---- Augmentation gadgets -------------------------------------------------
// Both gadgets append two sink vertices s_{+1} = base_n and s_{-1} =
// base_n + 1 and pin an assignment via heavy sink edges.

// Conditional gadget: sink-sink weight 10^5 n k, and weight-2k edges from
// each left vertex u to s_{-x_u}. Returns G united with the gadget; base
// edges carry weight 1.
WeightedGraph gadget_cond(const BipartiteInstance& g, std::span<const int8_t> x,
                          uint32_t k);

// Value gadget for a k-regular multigraph A on N vertices: sink-sink weight
// 5000 N k and weight-100k edges from every vertex w to s_{-x_w}. The
// optimum cut weight of the union is 5000Nk + 100Nk + cutweight(A, x).
WeightedGraph gadget_det(const Multigraph& a, std::span<const int8_t> x);

// Unnormalized cut weight of a multigraph (multiplicities count).
int64_t cutweight(const Multigraph& a, uint64_t cut_bits);

// Exact weighted Max-Cut by enumeration; vertex count <= 22. Ties break
// toward the lexicographically smallest cut with bit 0 = 0.
std::pair<uint64_t, int64_t> weighted_maxcut_brute(const WeightedGraph& g);

// ---- Complete-bipartite disjoint instances --------------------------------

// Bip(S): all edges between S (mask) and its complement in [n].
Graph bip_instance(uint64_t s_mask, uint32_t n);

// Cut value of T in Bip(S) via the overlap formula
// 1 - ((1-p)q + p(1-q)), p = |S \ T|/|S|, q = |T \ S|/|comp(S)|.
// Computed in exact integer arithmetic; equals cut_value(bip_instance(S), T).
double bip_cut_value_formula(uint64_t s_mask, uint64_t t_mask, uint32_t n);

// ---- Hamming-ball family ---------------------------------------------------

double binary_entropy(double p);
// sum_{i <= radius} C(n, i); requires n <= 62.
uint64_t hamming_ball_size(uint32_t n, uint32_t radius);
// The binomial-sum bound: ball of relative radius delta has size at most
// 2^(n H(delta)) for delta <= 1/2.
bool hamming_ball_entropy_bound_holds(uint32_t n, double delta);

struct HammingFamily {
  std::vector<uint64_t> strings;
  uint64_t sampled = 0;
  uint64_t weight_rejections = 0;
  uint64_t collision_removals = 0;
};

// Samples `trials` uniform n-bit strings, keeps relative weight in
// [1/3, 2/3], and removes one string of every pair at normalized distance
// <= 2 delta or >= 1 - 2 delta; survivors have pairwise disjoint
// radius-delta ball pairs around themselves and their complements.
HammingFamily hamming_family(uint32_t n, double delta, uint64_t trials,
                             uint64_t seed);

// ---- Deterministic value gap ----------------------------------------------

// Entry (u, v) = multiplicity in a1 minus multiplicity in a2. Both graphs
// must share left/right sizes n.
std::vector<int32_t> signed_difference_matrix(const BipartiteInstance& a1,
                                              const BipartiteInstance& a2);

struct GapTrial {
  std::vector<int8_t> y;  // right assignment
  std::vector<int8_t> x;  // sign(By), zeros to +1
  int64_t xby = 0;        // x^T B y = ||By||_1 for that x
  double gap = 0.0;       // |x^T B y| / 2
};

GapTrial gap_for_y(const std::vector<int32_t>& b, uint32_t n,
                   std::span<const int8_t> y);

struct ValueGapResult {
  GapTrial best;
  uint64_t diff_size = 0;    // sum |B_uv|
  double khintchine_floor = 0.0;  // (c/sqrt(2)) * m / sqrt(k), c = 1/sqrt(2)
};

// Best sign-construction gap over `restarts` uniform right assignments.
// Both inputs must be k-regular on each side.
ValueGapResult value_gap_experiment(const BipartiteInstance& a1,
                                    const BipartiteInstance& a2,
                                    uint32_t restarts, Rng& rng);

// Monte-Carlo mean of min(|X|, |Y|) for independent length-m Rademacher
// sums; reference floor is (9/512) sqrt(m).
double rademacher_min_mean(uint32_t m, uint32_t samples, Rng& rng);

}  // namespace densestream
