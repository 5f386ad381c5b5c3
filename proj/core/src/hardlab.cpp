#include "densestream/hardlab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

namespace densestream {

std::vector<uint32_t> BipartiteInstance::left_degrees() const {
  std::vector<uint32_t> deg(left_size, 0);
  for (const auto& [u, v] : edges) ++deg[u];
  return deg;
}

std::vector<uint32_t> BipartiteInstance::right_degrees() const {
  std::vector<uint32_t> deg(right_size, 0);
  for (const auto& [u, v] : edges) ++deg[v];
  return deg;
}

bool BipartiteInstance::right_regular(uint32_t k) const {
  const auto deg = right_degrees();
  return std::all_of(deg.begin(), deg.end(),
                     [k](uint32_t d) { return d == k; });
}

double HardFamilyParams::tau(uint32_t n, uint32_t k) {
  return n * std::sqrt(static_cast<double>(k)) / 2000.0;
}

namespace {

void check_assignment(std::span<const int8_t> a, size_t expect,
                      const char* side) {
  if (a.size() != expect)
    throw InputError(std::string(side) + " assignment length mismatch");
  for (int8_t v : a) {
    if (v != 1 && v != -1)
      throw InputError(std::string(side) + " assignment entries must be +-1");
  }
}

std::vector<int64_t> all_discs(const BipartiteInstance& g,
                               std::span<const int8_t> x) {
  std::vector<int64_t> d(g.right_size, 0);
  for (const auto& [u, v] : g.edges) d[v] += x[u];
  return d;
}

}  // namespace

int64_t disc(const BipartiteInstance& g, std::span<const int8_t> x, uint32_t v) {
  check_assignment(x, g.left_size, "left");
  if (v >= g.right_size) throw InputError("right vertex out of range");
  int64_t sum = 0;
  for (const auto& [eu, ev] : g.edges) {
    if (ev == v) sum += x[eu];
  }
  return sum;
}

double cval(const BipartiteInstance& g, std::span<const int8_t> x,
            std::span<const int8_t> y) {
  check_assignment(x, g.left_size, "left");
  check_assignment(y, g.right_size, "right");
  int64_t dot = 0;
  for (const auto& [u, v] : g.edges) dot += static_cast<int64_t>(x[u]) * y[v];
  return (static_cast<double>(g.edges.size()) - static_cast<double>(dot)) / 2.0;
}

double copt(const BipartiteInstance& g, std::span<const int8_t> x) {
  check_assignment(x, g.left_size, "left");
  const auto d = all_discs(g, x);
  int64_t total = 0;
  for (int64_t v : d) total += std::abs(v);
  return (static_cast<double>(g.edges.size()) + static_cast<double>(total)) / 2.0;
}

double closs(const BipartiteInstance& g, std::span<const int8_t> x,
             std::span<const int8_t> y) {
  check_assignment(x, g.left_size, "left");
  check_assignment(y, g.right_size, "right");
  const auto d = all_discs(g, x);
  int64_t total = 0;
  for (uint32_t v = 0; v < g.right_size; ++v)
    total += std::abs(d[v]) + static_cast<int64_t>(y[v]) * d[v];
  return static_cast<double>(total) / 2.0;
}

double slack(double a, double b) { return std::abs(a) + std::abs(b) - std::abs(a + b); }

int64_t slack(int64_t a, int64_t b) {
  return std::abs(a) + std::abs(b) - std::abs(a + b);
}

double advantage(const BipartiteInstance& g1, const BipartiteInstance& g2,
                 std::span<const int8_t> x, uint32_t v) {
  return static_cast<double>(slack(disc(g1, x, v), disc(g2, x, v)));
}

SharedGoodResult check_shared_good(const BipartiteInstance& g1,
                                   const BipartiteInstance& g2,
                                   std::span<const int8_t> x, double tau) {
  if (g1.right_size != g2.right_size || g1.left_size != g2.left_size)
    throw InputError("instances must share the vertex set");
  const uint32_t nr = g1.right_size;
  if (nr > 20) throw CapError("shared-good check capped at 20 right vertices");
  check_assignment(x, g1.left_size, "left");

  const auto d1 = all_discs(g1, x);
  const auto d2 = all_discs(g2, x);

  SharedGoodResult result;
  // Closed form: min_y (closs1 + closs2) = 1/2 sum_v slack(d1_v, d2_v),
  // attained at y_v = -sign(d1_v + d2_v) (zeros to +1).
  int64_t slack_sum = 0;
  result.witness.assign(nr, 0);
  for (uint32_t v = 0; v < nr; ++v) {
    slack_sum += slack(d1[v], d2[v]);
    result.witness[v] = (d1[v] + d2[v] > 0) ? -1 : 1;
  }
  result.advantage_sum = static_cast<double>(slack_sum);
  result.min_total_loss = static_cast<double>(slack_sum) / 2.0;

  // Exhaustive decision: does any y keep both losses at most tau?
  const double m1 = static_cast<double>(g1.edges.size());
  const double m2 = static_cast<double>(g2.edges.size());
  const double opt1 = copt(g1, x), opt2 = copt(g2, x);
  for (uint64_t bits = 0; bits < (1ULL << nr); ++bits) {
    double loss1 = 0.0, loss2 = 0.0;
    // closs = copt - cval; accumulate cval dot products per vertex.
    int64_t dot1 = 0, dot2 = 0;
    for (uint32_t v = 0; v < nr; ++v) {
      const int64_t yv = ((bits >> v) & 1) ? 1 : -1;
      dot1 += yv * d1[v];
      dot2 += yv * d2[v];
    }
    loss1 = opt1 - (m1 - static_cast<double>(dot1)) / 2.0;
    loss2 = opt2 - (m2 - static_cast<double>(dot2)) / 2.0;
    if (loss1 <= tau && loss2 <= tau) {
      result.exists = true;
      result.witness.assign(nr, 0);
      for (uint32_t v = 0; v < nr; ++v)
        result.witness[v] = ((bits >> v) & 1) ? 1 : -1;
      break;
    }
  }
  return result;
}

BipartiteInstance grr_sample(uint32_t n, uint32_t k, Rng& rng) {
  if (k > n) throw InputError("right-regularity k exceeds left side size");
  BipartiteInstance g;
  g.left_size = n;
  g.right_size = n;
  g.edges.reserve(static_cast<size_t>(n) * k);
  std::vector<uint32_t> pool(n);
  for (uint32_t v = 0; v < n; ++v) {
    // Partial Fisher-Yates draw of a uniform k-subset.
    std::iota(pool.begin(), pool.end(), 0);
    for (uint32_t i = 0; i < k; ++i) {
      const uint64_t j = i + uniform_below(rng, n - i);
      std::swap(pool[i], pool[j]);
      g.edges.emplace_back(pool[i], v);
    }
  }
  return g;
}

BipartiteInstance matching_union_sample(uint32_t n, uint32_t k, Rng& rng) {
  if (k > n) throw InputError("matching count k exceeds side size");
  BipartiteInstance g;
  g.left_size = n;
  g.right_size = n;
  g.edges.reserve(static_cast<size_t>(n) * k);
  std::vector<uint32_t> perm(n);
  for (uint32_t round = 0; round < k; ++round) {
    std::iota(perm.begin(), perm.end(), 0);
    for (uint32_t i = n; i > 1; --i) {
      const uint64_t j = uniform_below(rng, i);
      std::swap(perm[i - 1], perm[j]);
    }
    for (uint32_t u = 0; u < n; ++u) g.edges.emplace_back(u, perm[u]);
  }
  return g;
}

uint64_t tail_degree(const BipartiteInstance& g, uint32_t threshold) {
  uint64_t total = 0;
  for (uint32_t d : g.left_degrees()) {
    if (d > threshold) total += d;
  }
  return total;
}

uint64_t edge_overlap(const BipartiteInstance& g1, const BipartiteInstance& g2) {
  auto key = [](const std::pair<uint32_t, uint32_t>& e) {
    return (static_cast<uint64_t>(e.first) << 32) | e.second;
  };
  std::vector<uint64_t> e1, e2;
  e1.reserve(g1.edges.size());
  e2.reserve(g2.edges.size());
  for (const auto& e : g1.edges) e1.push_back(key(e));
  for (const auto& e : g2.edges) e2.push_back(key(e));
  std::sort(e1.begin(), e1.end());
  std::sort(e2.begin(), e2.end());
  // Multiset intersection size.
  uint64_t overlap = 0;
  size_t i = 0, j = 0;
  while (i < e1.size() && j < e2.size()) {
    if (e1[i] < e2[j]) {
      ++i;
    } else if (e2[j] < e1[i]) {
      ++j;
    } else {
      ++overlap;
      ++i;
      ++j;
    }
  }
  return overlap;
}

std::pair<std::vector<BipartiteInstance>, FamilyFilterStats> hard_family_filter(
    std::vector<BipartiteInstance> candidates, uint32_t k,
    const HardFamilyParams& params) {
  FamilyFilterStats stats;
  stats.candidates = candidates.size();

  std::vector<BipartiteInstance> kept;
  for (auto& g : candidates) {
    const double n = g.left_size;
    uint64_t deg_sq = 0;
    for (uint32_t d : g.left_degrees()) deg_sq += static_cast<uint64_t>(d) * d;
    if (static_cast<double>(deg_sq) > params.c_deg * n * k * k) {
      ++stats.degree_violations;
      continue;
    }
    if (static_cast<double>(tail_degree(g, 2 * k)) >
        params.eta_tail * n * std::sqrt(static_cast<double>(k))) {
      ++stats.tail_violations;
      continue;
    }
    kept.push_back(std::move(g));
  }

  // Remove the later graph of every overlapping pair.
  std::vector<bool> dead(kept.size(), false);
  for (size_t i = 0; i < kept.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = i + 1; j < kept.size(); ++j) {
      if (dead[j]) continue;
      const double n = kept[i].left_size;
      if (static_cast<double>(edge_overlap(kept[i], kept[j])) >
          params.eta_near * n * k) {
        dead[j] = true;
        ++stats.overlap_removals;
      }
    }
  }
  std::vector<BipartiteInstance> family;
  for (size_t i = 0; i < kept.size(); ++i) {
    if (!dead[i]) family.push_back(std::move(kept[i]));
  }
  return {std::move(family), stats};
}

WeightedGraph gadget_cond(const BipartiteInstance& g, std::span<const int8_t> x,
                          uint32_t k) {
  check_assignment(x, g.left_size, "left");
  WeightedGraph out;
  const uint32_t base = g.left_size + g.right_size;
  out.n = base + 2;
  const uint32_t s_plus = base, s_minus = base + 1;
  out.edges.reserve(g.edges.size() + g.left_size + 1);
  for (const auto& [u, v] : g.edges)
    out.edges.push_back({u, g.left_size + v, 1});
  const int64_t w_ss = 100000LL * g.left_size * k;
  out.edges.push_back({s_plus, s_minus, w_ss});
  for (uint32_t u = 0; u < g.left_size; ++u) {
    const uint32_t sink = x[u] > 0 ? s_minus : s_plus;  // s_{-x_u}
    out.edges.push_back({u, sink, 2LL * k});
  }
  return out;
}

WeightedGraph gadget_det(const Multigraph& a, std::span<const int8_t> x) {
  check_assignment(x, a.n, "vertex");
  std::vector<uint32_t> deg(a.n, 0);
  for (const auto& [u, v] : a.edges) {
    ++deg[u];
    ++deg[v];
  }
  const uint32_t k = a.n > 0 ? deg[0] : 0;
  for (uint32_t d : deg) {
    if (d != k) throw InputError("value gadget requires a k-regular graph");
  }
  WeightedGraph out;
  out.n = a.n + 2;
  const uint32_t s_plus = a.n, s_minus = a.n + 1;
  out.edges.reserve(a.edges.size() + a.n + 1);
  for (const auto& [u, v] : a.edges) out.edges.push_back({u, v, 1});
  out.edges.push_back({s_plus, s_minus, 5000LL * a.n * k});
  for (uint32_t w = 0; w < a.n; ++w) {
    const uint32_t sink = x[w] > 0 ? s_minus : s_plus;  // s_{-x_w}
    out.edges.push_back({w, sink, 100LL * k});
  }
  return out;
}

int64_t cutweight(const Multigraph& a, uint64_t cut_bits) {
  int64_t total = 0;
  for (const auto& [u, v] : a.edges)
    total += static_cast<int64_t>(((cut_bits >> u) ^ (cut_bits >> v)) & 1ULL);
  return total;
}

std::pair<uint64_t, int64_t> weighted_maxcut_brute(const WeightedGraph& g) {
  if (g.n > 22) throw CapError("weighted max-cut oracle capped at 22 vertices");
  if (g.n < 1) throw InputError("weighted max-cut of an empty graph");
  int64_t best = 0;
  uint64_t best_bits = 0;
  bool have_best = false;
  const uint64_t half_cube = g.n == 1 ? 1 : 1ULL << (g.n - 1);
  for (uint64_t rest = 0; rest < half_cube; ++rest) {
    const uint64_t bits = rest << 1;
    int64_t weight = 0;
    for (const auto& e : g.edges)
      weight += e.w * static_cast<int64_t>(((bits >> e.u) ^ (bits >> e.v)) & 1ULL);
    if (!have_best || weight > best ||
        (weight == best && solution_lex_less(bits, best_bits))) {
      have_best = true;
      best = weight;
      best_bits = bits;
    }
  }
  return {best_bits, best};
}

Graph bip_instance(uint64_t s_mask, uint32_t n) {
  if (n < 2 || n > 64) throw InputError("bipartite instance needs 2 <= n <= 64");
  const uint64_t full = n >= 64 ? ~0ULL : (1ULL << n) - 1;
  s_mask &= full;
  if (s_mask == 0 || s_mask == full)
    throw InputError("bipartite instance side must be nonempty and proper");
  Graph g;
  g.n = n;
  const EdgeUniverse universe(n);
  for (uint32_t u = 0; u < n; ++u) {
    if (!((s_mask >> u) & 1)) continue;
    for (uint32_t v = 0; v < n; ++v) {
      if ((s_mask >> v) & 1) continue;
      g.edges.push_back(universe.encode(u, v));
    }
  }
  return g;
}

double bip_cut_value_formula(uint64_t s_mask, uint64_t t_mask, uint32_t n) {
  if (n < 2 || n > 64) throw InputError("bipartite instance needs 2 <= n <= 64");
  const uint64_t full = n >= 64 ? ~0ULL : (1ULL << n) - 1;
  s_mask &= full;
  t_mask &= full;
  if (s_mask == 0 || s_mask == full)
    throw InputError("bipartite instance side must be nonempty and proper");
  const uint64_t s = std::popcount(s_mask);
  const uint64_t s_bar = n - s;
  const uint64_t s_not_t = std::popcount(s_mask & ~t_mask);   // p numerator
  const uint64_t t_not_s = std::popcount(t_mask & ~s_mask);   // q numerator
  // 1 - ((1-p)q + p(1-q)) with p = s_not_t/s, q = t_not_s/s_bar, cleared of
  // denominators: crossing pairs are S&T x comp(S)&comp(T) and S\T x T\S.
  const uint64_t crossing =
      (s - s_not_t) * (s_bar - t_not_s) + s_not_t * t_not_s;
  return static_cast<double>(crossing) / static_cast<double>(s * s_bar);
}

double binary_entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

uint64_t hamming_ball_size(uint32_t n, uint32_t radius) {
  if (n > 62) throw CapError("hamming ball size capped at n <= 62");
  radius = std::min(radius, n);
  uint64_t binom = 1, total = 0;
  for (uint32_t i = 0; i <= radius; ++i) {
    total += binom;
    binom = binom * (n - i) / (i + 1);
  }
  return total;
}

bool hamming_ball_entropy_bound_holds(uint32_t n, double delta) {
  const uint32_t radius = static_cast<uint32_t>(delta * n);
  if (radius > n / 2) throw InputError("entropy bound needs radius <= n/2");
  const double bound = std::exp2(n * binary_entropy(delta));
  return static_cast<double>(hamming_ball_size(n, radius)) <= bound;
}

HammingFamily hamming_family(uint32_t n, double delta, uint64_t trials,
                             uint64_t seed) {
  if (n < 2 || n > 62) throw InputError("hamming family needs 2 <= n <= 62");
  if (!(delta > 0.0 && delta < 0.5))
    throw InputError("hamming family needs delta in (0, 1/2)");
  HammingFamily out;
  out.sampled = trials;
  const uint64_t full = (n >= 64) ? ~0ULL : (1ULL << n) - 1;
  Rng rng(seed);
  std::vector<uint64_t> pool;
  for (uint64_t i = 0; i < trials; ++i) {
    const uint64_t x = rng() & full;
    const uint32_t w = static_cast<uint32_t>(std::popcount(x));
    if (3ULL * w < n || 3ULL * w > 2ULL * n) {
      ++out.weight_rejections;
      continue;
    }
    pool.push_back(x);
  }
  // Ball-disjointness filter: the radius-delta balls around x, comp(x) and
  // x', comp(x') can only meet if d(x,x') <= 2 delta n or >= (1-2 delta) n.
  std::vector<bool> dead(pool.size(), false);
  for (size_t i = 0; i < pool.size(); ++i) {
    if (dead[i]) continue;
    for (size_t j = i + 1; j < pool.size(); ++j) {
      if (dead[j]) continue;
      const uint32_t d = static_cast<uint32_t>(std::popcount(pool[i] ^ pool[j]));
      const double nd = static_cast<double>(d) / n;
      if (nd <= 2.0 * delta || nd >= 1.0 - 2.0 * delta) {
        dead[j] = true;
        ++out.collision_removals;
      }
    }
  }
  for (size_t i = 0; i < pool.size(); ++i) {
    if (!dead[i]) out.strings.push_back(pool[i]);
  }
  return out;
}

std::vector<int32_t> signed_difference_matrix(const BipartiteInstance& a1,
                                              const BipartiteInstance& a2) {
  if (a1.left_size != a2.left_size || a1.right_size != a2.right_size)
    throw InputError("difference matrix needs matching vertex sets");
  const uint32_t n = a1.left_size;
  if (a1.right_size != n) throw InputError("difference matrix needs |L| = |R|");
  std::vector<int32_t> b(static_cast<size_t>(n) * n, 0);
  for (const auto& [u, v] : a1.edges) ++b[static_cast<size_t>(u) * n + v];
  for (const auto& [u, v] : a2.edges) --b[static_cast<size_t>(u) * n + v];
  return b;
}

GapTrial gap_for_y(const std::vector<int32_t>& b, uint32_t n,
                   std::span<const int8_t> y) {
  check_assignment(y, n, "right");
  GapTrial trial;
  trial.y.assign(y.begin(), y.end());
  trial.x.resize(n);
  int64_t total = 0;
  for (uint32_t u = 0; u < n; ++u) {
    int64_t row = 0;
    for (uint32_t v = 0; v < n; ++v)
      row += static_cast<int64_t>(b[static_cast<size_t>(u) * n + v]) * y[v];
    trial.x[u] = row >= 0 ? 1 : -1;  // sign(0) := +1
    total += trial.x[u] * row;       // = |row|
  }
  trial.xby = total;
  trial.gap = static_cast<double>(std::abs(total)) / 2.0;
  return trial;
}

ValueGapResult value_gap_experiment(const BipartiteInstance& a1,
                                    const BipartiteInstance& a2,
                                    uint32_t restarts, Rng& rng) {
  const uint32_t n = a1.left_size;
  const auto ld1 = a1.left_degrees(), rd1 = a1.right_degrees();
  const auto ld2 = a2.left_degrees(), rd2 = a2.right_degrees();
  const uint32_t k = ld1.empty() ? 0 : ld1[0];
  auto regular = [&](const std::vector<uint32_t>& deg) {
    return std::all_of(deg.begin(), deg.end(),
                       [&](uint32_t d) { return d == k; });
  };
  if (!regular(ld1) || !regular(rd1) || !regular(ld2) || !regular(rd2))
    throw InputError("value gap experiment requires k-regular inputs");

  ValueGapResult result;
  const auto b = signed_difference_matrix(a1, a2);
  for (int32_t e : b) result.diff_size += static_cast<uint64_t>(std::abs(e));
  // Khintchine p=1 constant c = 1/sqrt(2); floor (c/sqrt(2)) m / sqrt(k).
  result.khintchine_floor =
      k == 0 ? 0.0
             : static_cast<double>(result.diff_size) /
                   (2.0 * std::sqrt(static_cast<double>(k)));

  std::vector<int8_t> y(n);
  for (uint32_t r = 0; r < std::max<uint32_t>(restarts, 1); ++r) {
    for (auto& v : y) v = (rng() & 1) ? 1 : -1;
    GapTrial trial = gap_for_y(b, n, y);
    if (r == 0 || trial.gap > result.best.gap) result.best = std::move(trial);
  }
  return result;
}

double rademacher_min_mean(uint32_t m, uint32_t samples, Rng& rng) {
  if (m == 0 || samples == 0)
    throw InputError("rademacher mean needs positive length and samples");
  double total = 0.0;
  for (uint32_t s = 0; s < samples; ++s) {
    int64_t x = 0, y = 0;
    for (uint32_t i = 0; i < m; ++i) {
      const uint64_t bits = rng();
      x += (bits & 1) ? 1 : -1;
      y += (bits & 2) ? 1 : -1;
    }
    total += static_cast<double>(std::min(std::abs(x), std::abs(y)));
  }
  return total / samples;
}

}  // namespace densestream
