#include "densestream/optimizers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "densestream/f0_sketch.hpp"
#include "densestream/sampler.hpp"

namespace densestream {

namespace {

constexpr uint32_t kMaxEnumerateN = 24;        // 2^n solution loops
constexpr uint64_t kMaxCspSolutions = 1ULL << 24;
constexpr uint64_t kMaxCspWork = 1ULL << 34;   // offline enumeration budget
constexpr uint32_t kMaxBruteDensestN = 20;
constexpr uint64_t kMaxBruteCspSolutions = 1ULL << 20;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

double pow_u64(uint32_t base, uint32_t exp) {
  double p = 1.0;
  for (uint32_t i = 0; i < exp; ++i) p *= base;
  return p;
}

uint64_t ipow(uint32_t base, uint32_t exp) {
  uint64_t p = 1;
  for (uint32_t i = 0; i < exp; ++i) p *= base;
  return p;
}

void check_cut_caps(const DenseRunConfig& config) {
  if (config.n < 2) throw ConfigError("need at least 2 vertices");
  if (config.n > kMaxEnumerateN)
    throw CapError("solution enumeration capped at n <= " +
                   std::to_string(kMaxEnumerateN));
  if (!(config.eps > 0.0 && config.eps < 1.0))
    throw ConfigError("eps must lie in (0, 1)");
  if (!(config.alpha > 0.0 && config.alpha <= 1.0))
    throw ConfigError("alpha must lie in (0, 1]");
}

DenseSampler make_sampler(uint64_t universe, uint32_t n, double eps_prime,
                          const DenseRunConfig& config) {
  if (config.sampler_exhaustive)
    return DenseSampler::exhaustive(universe, config.seed, 1);
  SamplerConfig sc;
  sc.universe_size = universe;
  const double lambda = config.sampler_lambda_override > 0.0
                            ? config.sampler_lambda_override
                            : eps_prime * config.alpha;
  sc.lambda = lambda;
  sc.walk_length =
      config.sampler_walk_override > 0
          ? config.sampler_walk_override
          : static_cast<uint64_t>(std::ceil(
                4.0 * n / (eps_prime * eps_prime * config.alpha * config.alpha)));
  sc.multiplicity_cap = 1;  // sampler paths assume simple streams
  sc.seed = mix64(config.seed ^ 0x73616d70ULL);
  return DenseSampler(sc);
}

}  // namespace

bool subset_lex_less(uint64_t a, uint64_t b) {
  while (a != 0 && b != 0) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

// ---- Max-Cut -----------------------------------------------------------

namespace {

MaxCutResult maxcut_dense_f0(std::span<const uint64_t> stream,
                             const DenseRunConfig& config) {
  const EdgeUniverse universe(config.n);
  F0Sketch count_sketch({config.eps / 10.0, 1.0 / 9.0, universe.size()},
                        mix64(config.seed ^ 0x6d31ULL));
  F0Sketch union_sketch(
      {config.eps * config.alpha / 10.0,
       std::ldexp(1.0 / 9.0, -static_cast<int>(config.n)), universe.size()},
      mix64(config.seed ^ 0x6d32ULL));
  for (uint64_t e : stream) {
    count_sketch.insert(e);
    union_sketch.insert(e);
  }
  const double m_hat = count_sketch.estimate();
  if (m_hat <= 0.0) throw UndefinedError("max-cut of an empty stream");

  MaxCutResult result;
  result.edge_count_estimate = m_hat;
  result.density_warning =
      m_hat < config.alpha * static_cast<double>(config.n) * config.n;

  bool have_best = false;
  double best = 0.0;
  uint64_t best_bits = 0;
  const uint64_t half_cube = 1ULL << (config.n - 1);
  for (uint64_t rest = 0; rest < half_cube; ++rest) {
    const Cut x{config.n, rest << 1};  // vertex 0 pinned to side 0
    const double crossing = static_cast<double>(crossing_count(x));
    const double u_hat = union_sketch.estimate_union_stream(
        [&](auto&& sink) { for_each_crossing(x, universe, sink); });
    const double v_hat = m_hat + crossing - u_hat;
    if (config.collect_queries) result.queries.push_back({x.bits, v_hat});
    if (!have_best || v_hat > best ||
        (v_hat == best && solution_lex_less(x.bits, best_bits))) {
      have_best = true;
      best = v_hat;
      best_bits = x.bits;
    }
  }
  result.cut = Cut{config.n, best_bits};
  result.value_estimate = clamp01(best / m_hat);
  return result;
}

MaxCutResult maxcut_dense_sampler(std::span<const uint64_t> stream,
                                  const DenseRunConfig& config) {
  const EdgeUniverse universe(config.n);
  const double eps_prime = config.eps / 16.0;  // arity-2 alphabet-2 budget
  DenseSampler sampler = make_sampler(universe.size(), config.n, eps_prime, config);
  uint64_t m = 0;
  for (uint64_t e : stream) {
    if (e >= universe.size()) throw InputError("edge index out of universe");
    sampler.insert(e);
    ++m;
  }
  if (m == 0) throw UndefinedError("max-cut of an empty stream");
  sampler.finalize();

  // Decode the weighted sample once; every cut reuses it.
  struct WeightedEdge {
    uint32_t u, v;
    double w;
  };
  std::vector<WeightedEdge> sample;
  sample.reserve(sampler.sample_weights().size());
  for (const auto& [elem, weight] : sampler.sample_weights()) {
    const auto [u, v] = universe.decode(elem);
    sample.push_back({u, v, static_cast<double>(weight)});
  }
  const double scale = static_cast<double>(sampler.padded_universe()) /
                       (static_cast<double>(sampler.walk().size()) *
                        static_cast<double>(sampler.stream_size()));

  MaxCutResult result;
  result.edge_count_estimate = static_cast<double>(m);
  result.density_warning =
      static_cast<double>(m) < config.alpha * static_cast<double>(config.n) * config.n;

  bool have_best = false;
  double best = 0.0;
  uint64_t best_bits = 0;
  const uint64_t half_cube = 1ULL << (config.n - 1);
  for (uint64_t rest = 0; rest < half_cube; ++rest) {
    const Cut x{config.n, rest << 1};
    double sum = 0.0;
    for (const auto& e : sample) {
      if (x.crosses(e.u, e.v)) sum += e.w;
    }
    const double mu_hat = scale * sum;  // estimates the cut value fraction
    if (config.collect_queries) result.queries.push_back({x.bits, mu_hat});
    if (!have_best || mu_hat > best ||
        (mu_hat == best && solution_lex_less(x.bits, best_bits))) {
      have_best = true;
      best = mu_hat;
      best_bits = x.bits;
    }
  }
  result.cut = Cut{config.n, best_bits};
  result.value_estimate = clamp01(best);
  return result;
}

}  // namespace

MaxCutResult maxcut_dense(std::span<const uint64_t> stream,
                          const DenseRunConfig& config) {
  check_cut_caps(config);
  return config.variant == Variant::kF0 ? maxcut_dense_f0(stream, config)
                                        : maxcut_dense_sampler(stream, config);
}

std::pair<Cut, double> maxcut_brute(const Graph& g) {
  if (g.n > kMaxEnumerateN)
    throw CapError("brute-force max-cut capped at n <= " +
                   std::to_string(kMaxEnumerateN));
  const auto distinct = g.distinct_edges();
  if (distinct.empty()) throw UndefinedError("max-cut of an empty graph");
  const EdgeUniverse universe(g.n);
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  edges.reserve(distinct.size());
  for (uint64_t e : distinct) edges.push_back(universe.decode(e));

  uint64_t best = 0;
  uint64_t best_bits = 0;
  bool have_best = false;
  const uint64_t half_cube = 1ULL << (g.n - 1);
  for (uint64_t rest = 0; rest < half_cube; ++rest) {
    const Cut x{g.n, rest << 1};
    uint64_t crossing = 0;
    for (const auto& [u, v] : edges) crossing += x.crosses(u, v);
    if (!have_best || crossing > best ||
        (crossing == best && solution_lex_less(x.bits, best_bits))) {
      have_best = true;
      best = crossing;
      best_bits = x.bits;
    }
  }
  return {Cut{g.n, best_bits},
          static_cast<double>(best) / static_cast<double>(distinct.size())};
}

// ---- Densest subgraph ---------------------------------------------------

namespace {

template <class DensityFn>
DensestResult densest_argmax(uint32_t n, uint64_t m, const DenseRunConfig& config,
                             DensityFn&& density_of) {
  DensestResult result;
  result.n = n;
  result.edge_count = m;
  result.density_warning =
      static_cast<double>(m) < config.alpha * static_cast<double>(n) * n;

  bool have_best = false;
  double best = 0.0;
  uint64_t best_subset = 0;
  const uint64_t cube = 1ULL << n;
  for (uint64_t subset = 1; subset < cube; ++subset) {
    const uint32_t size = static_cast<uint32_t>(std::popcount(subset));
    // Any optimum has |S| >= m/n, so smaller subsets are never needed.
    if (static_cast<uint64_t>(size) * n < m) continue;
    const double d_hat = density_of(subset, size);
    if (config.collect_queries) result.queries.push_back({subset, d_hat});
    if (!have_best || d_hat > best ||
        (d_hat == best && subset_lex_less(subset, best_subset))) {
      have_best = true;
      best = d_hat;
      best_subset = subset;
    }
  }
  result.subset = best_subset;
  result.density_estimate = best;
  return result;
}

template <class Sink>
void feed_inner_pairs(uint64_t subset, const EdgeUniverse& universe, Sink&& sink) {
  for (uint64_t rest = subset; rest != 0; rest &= rest - 1) {
    const uint32_t u = static_cast<uint32_t>(std::countr_zero(rest));
    for (uint64_t rest2 = rest & (rest - 1); rest2 != 0; rest2 &= rest2 - 1) {
      sink(universe.encode(u, static_cast<uint32_t>(std::countr_zero(rest2))));
    }
  }
}

DensestResult densest_dense_f0(std::span<const uint64_t> stream,
                               const DenseRunConfig& config) {
  const EdgeUniverse universe(config.n);
  F0Sketch union_sketch(
      {config.eps * config.alpha * config.alpha / 4.0,
       std::ldexp(0.5, -static_cast<int>(config.n)), universe.size()},
      mix64(config.seed ^ 0x6473ULL));
  uint64_t m = 0;  // exact edge counter; the stream is assumed simple
  for (uint64_t e : stream) {
    union_sketch.insert(e);
    ++m;
  }
  return densest_argmax(
      config.n, m, config, [&](uint64_t subset, uint32_t size) {
        const double inner = static_cast<double>(size) * (size - 1) / 2.0;
        const double u_hat = union_sketch.estimate_union_stream(
            [&](auto&& sink) { feed_inner_pairs(subset, universe, sink); });
        return (static_cast<double>(m) + inner - u_hat) / size;
      });
}

DensestResult densest_dense_sampler(std::span<const uint64_t> stream,
                                    const DenseRunConfig& config) {
  const EdgeUniverse universe(config.n);
  const double eps_prime = config.eps * config.alpha / 16.0;
  DenseSampler sampler = make_sampler(universe.size(), config.n, eps_prime, config);
  uint64_t m = 0;
  for (uint64_t e : stream) {
    if (e >= universe.size()) throw InputError("edge index out of universe");
    sampler.insert(e);
    ++m;
  }
  sampler.finalize();

  std::vector<std::pair<uint64_t, double>> sample;  // (endpoint mask, weight)
  if (m > 0) {
    sample.reserve(sampler.sample_weights().size());
    for (const auto& [elem, weight] : sampler.sample_weights()) {
      const auto [u, v] = universe.decode(elem);
      sample.push_back({(1ULL << u) | (1ULL << v), static_cast<double>(weight)});
    }
  }
  const double scale =
      m == 0 ? 0.0
             : static_cast<double>(sampler.padded_universe()) /
                   (static_cast<double>(sampler.walk().size()) *
                    static_cast<double>(sampler.stream_size()));

  return densest_argmax(config.n, m, config,
                        [&](uint64_t subset, uint32_t size) {
                          double sum = 0.0;
                          for (const auto& [mask, w] : sample) {
                            if ((mask & subset) == mask) sum += w;
                          }
                          // (m/|S|) * mu_hat(f_S) with the m factors cancelled.
                          return scale * sum *
                                 static_cast<double>(sampler.stream_size()) / size;
                        });
}

}  // namespace

DensestResult densest_dense(std::span<const uint64_t> stream,
                            const DenseRunConfig& config) {
  check_cut_caps(config);
  return config.variant == Variant::kF0 ? densest_dense_f0(stream, config)
                                        : densest_dense_sampler(stream, config);
}

std::pair<uint64_t, double> densest_brute(const Graph& g) {
  if (g.n > kMaxBruteDensestN)
    throw CapError("brute-force densest subgraph capped at n <= " +
                   std::to_string(kMaxBruteDensestN));
  const auto distinct = g.distinct_edges();
  const EdgeUniverse universe(g.n);
  std::vector<uint64_t> edge_masks;
  edge_masks.reserve(distinct.size());
  for (uint64_t e : distinct) {
    const auto [u, v] = universe.decode(e);
    edge_masks.push_back((1ULL << u) | (1ULL << v));
  }

  uint64_t best_subset = 1;
  uint64_t best_edges = 0;
  uint32_t best_size = 1;
  const uint64_t cube = 1ULL << g.n;
  for (uint64_t subset = 1; subset < cube; ++subset) {
    uint64_t inner = 0;
    for (uint64_t mask : edge_masks) inner += ((mask & subset) == mask);
    const uint32_t size = static_cast<uint32_t>(std::popcount(subset));
    // Compare inner/size against best_edges/best_size exactly.
    const uint64_t lhs = inner * best_size, rhs = best_edges * size;
    if (lhs > rhs || (lhs == rhs && subset_lex_less(subset, best_subset))) {
      best_subset = subset;
      best_edges = inner;
      best_size = size;
    }
  }
  return {best_subset, static_cast<double>(best_edges) / best_size};
}

// ---- Max-CSP -------------------------------------------------------------

namespace {

void check_csp_caps(const CspShape& shape, const DenseRunConfig& config) {
  if (shape.n == 0) throw ConfigError("need at least 1 variable");
  if (shape.k < 1 || shape.k > 3) throw CapError("csp arity capped at k <= 3");
  if (shape.q < 2 || shape.q > 3) throw CapError("csp alphabet capped at q <= 3");
  if (shape.k > shape.n) throw ConfigError("arity exceeds variable count");
  const double solutions = pow_u64(shape.q, shape.n);
  if (solutions > static_cast<double>(kMaxCspSolutions))
    throw CapError("assignment enumeration capped at q^n <= 2^24");
  if (!(config.eps > 0.0 && config.eps < 1.0))
    throw ConfigError("eps must lie in (0, 1)");
  if (!(config.alpha > 0.0 && config.alpha <= 1.0))
    throw ConfigError("alpha must lie in (0, 1]");
}

std::vector<uint8_t> assignment_digits(uint64_t index, uint32_t n, uint32_t q) {
  std::vector<uint8_t> x(n);
  for (uint32_t i = n; i-- > 0;) {
    x[i] = static_cast<uint8_t>(index % q);
    index /= q;
  }
  return x;  // x[0] is the most significant digit: ascending index = lex order
}

// Streams the encoded ids of every universe constraint satisfied by x.
template <class Sink>
void feed_satisfied(const CspShape& shape, std::span<const uint8_t> x,
                    Sink&& sink) {
  const uint64_t tuples = shape.tuple_count();
  const uint64_t tables = shape.table_count();
  for (uint64_t tr = 0; tr < tuples; ++tr) {
    const Constraint probe = decode_constraint(tr * tables, shape);
    uint64_t point = 0;
    for (uint32_t v : probe.vars) point = point * shape.q + x[v];
    for (uint64_t tb = 0; tb < tables; ++tb) {
      if ((tb >> point) & 1) sink(tr * tables + tb);
    }
  }
}

CspResult csp_dense_f0(std::span<const uint64_t> stream, const CspShape& shape,
                       const DenseRunConfig& config) {
  const uint64_t solutions = ipow(shape.q, shape.n);
  const uint64_t universe = shape.universe_size();
  if (static_cast<double>(universe) * static_cast<double>(solutions) >
      static_cast<double>(kMaxCspWork))
    throw CapError("offline constraint enumeration over budget");

  const double qk = static_cast<double>(shape.point_count());
  const double table_space = static_cast<double>(shape.table_count());
  F0Sketch union_sketch(
      {config.eps * config.alpha / (8.0 * table_space * qk),
       1.0 / (3.0 * static_cast<double>(solutions)), universe},
      mix64(config.seed ^ 0x6373ULL));
  uint64_t m = 0;  // exact constraint counter; the stream is assumed simple
  for (uint64_t c : stream) {
    union_sketch.insert(c);
    ++m;
  }
  if (m == 0) throw UndefinedError("csp value of an empty stream");

  CspResult result;
  result.constraint_count = m;
  double nk = 1.0;
  for (uint32_t i = 0; i < shape.k; ++i) nk *= shape.n;
  result.density_warning = static_cast<double>(m) < config.alpha * nk;

  const double t_size =
      static_cast<double>(shape.tuple_count()) * table_space / 2.0;
  double best = 0.0;
  bool have_best = false;
  uint64_t best_index = 0;
  for (uint64_t a = 0; a < solutions; ++a) {
    const auto x = assignment_digits(a, shape.n, shape.q);
    const double u_hat = union_sketch.estimate_union_stream(
        [&](auto&& sink) { feed_satisfied(shape, x, sink); });
    const double v_hat = static_cast<double>(m) + t_size - u_hat;
    if (config.collect_queries)
      result.queries.push_back({a, clamp01(v_hat / static_cast<double>(m))});
    if (!have_best || v_hat > best) {  // ascending index = lex tie-break
      have_best = true;
      best = v_hat;
      best_index = a;
    }
  }
  result.assignment = assignment_digits(best_index, shape.n, shape.q);
  result.value_estimate = clamp01(best / static_cast<double>(m));
  return result;
}

CspResult csp_dense_sampler(std::span<const uint64_t> stream,
                            const CspShape& shape,
                            const DenseRunConfig& config) {
  const uint64_t solutions = ipow(shape.q, shape.n);
  const uint64_t universe = shape.universe_size();
  const double qk = static_cast<double>(shape.point_count());
  const double eps_prime = config.eps / (4.0 * qk);
  DenseSampler sampler = make_sampler(universe, shape.n, eps_prime, config);
  uint64_t m = 0;
  for (uint64_t c : stream) {
    if (c >= universe) throw InputError("constraint index out of universe");
    sampler.insert(c);
    ++m;
  }
  if (m == 0) throw UndefinedError("csp value of an empty stream");
  sampler.finalize();

  std::vector<std::pair<Constraint, double>> sample;
  sample.reserve(sampler.sample_weights().size());
  for (const auto& [elem, weight] : sampler.sample_weights())
    sample.push_back({decode_constraint(elem, shape), static_cast<double>(weight)});
  const double scale = static_cast<double>(sampler.padded_universe()) /
                       (static_cast<double>(sampler.walk().size()) *
                        static_cast<double>(sampler.stream_size()));

  CspResult result;
  result.constraint_count = m;
  double nk = 1.0;
  for (uint32_t i = 0; i < shape.k; ++i) nk *= shape.n;
  result.density_warning = static_cast<double>(m) < config.alpha * nk;

  double best = 0.0;
  bool have_best = false;
  uint64_t best_index = 0;
  for (uint64_t a = 0; a < solutions; ++a) {
    const auto x = assignment_digits(a, shape.n, shape.q);
    double sum = 0.0;
    for (const auto& [c, w] : sample) {
      if (constraint_satisfied(c, x, shape.q)) sum += w;
    }
    const double mu_hat = scale * sum;
    if (config.collect_queries) result.queries.push_back({a, clamp01(mu_hat)});
    if (!have_best || mu_hat > best) {
      have_best = true;
      best = mu_hat;
      best_index = a;
    }
  }
  result.assignment = assignment_digits(best_index, shape.n, shape.q);
  result.value_estimate = clamp01(best);
  return result;
}

}  // namespace

CspResult csp_dense(std::span<const uint64_t> stream, const CspShape& shape,
                    const DenseRunConfig& config) {
  check_csp_caps(shape, config);
  return config.variant == Variant::kF0
             ? csp_dense_f0(stream, shape, config)
             : csp_dense_sampler(stream, shape, config);
}

std::pair<std::vector<uint8_t>, double> csp_brute(const CspInstance& phi) {
  const double solutions_f = pow_u64(phi.shape.q, phi.shape.n);
  if (solutions_f > static_cast<double>(kMaxBruteCspSolutions))
    throw CapError("brute-force csp capped at q^n <= 2^20");
  if (phi.constraints.empty()) throw UndefinedError("csp value of an empty instance");
  const uint64_t solutions = ipow(phi.shape.q, phi.shape.n);

  // Deduplicate constraints once.
  std::vector<uint64_t> ids;
  ids.reserve(phi.constraints.size());
  for (const auto& c : phi.constraints) ids.push_back(encode_constraint(c, phi.shape));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Constraint> constraints;
  constraints.reserve(ids.size());
  for (uint64_t id : ids) constraints.push_back(decode_constraint(id, phi.shape));

  uint64_t best = 0;
  uint64_t best_index = 0;
  bool have_best = false;
  for (uint64_t a = 0; a < solutions; ++a) {
    const auto x = assignment_digits(a, phi.shape.n, phi.shape.q);
    uint64_t satisfied = 0;
    for (const auto& c : constraints)
      satisfied += constraint_satisfied(c, x, phi.shape.q);
    if (!have_best || satisfied > best) {
      have_best = true;
      best = satisfied;
      best_index = a;
    }
  }
  return {assignment_digits(best_index, phi.shape.n, phi.shape.q),
          static_cast<double>(best) / static_cast<double>(constraints.size())};
}

}  // namespace densestream
