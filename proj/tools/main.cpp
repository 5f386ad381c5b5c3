// Command-line driver: stream ingestion from files or generators, algorithm
// selection, experiment batches, CSV reporting.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"

#include "densestream/f0_sketch.hpp"
#include "densestream/hardlab.hpp"
#include "densestream/optimizers.hpp"
#include "densestream/sampler.hpp"
#include "densestream/simrare.hpp"
#include "densestream/stream_io.hpp"

namespace ds = densestream;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitInput = 3;
constexpr int kExitCap = 4;

uint64_t default_seed() {
  if (const char* env = std::getenv("DENSESTREAM_SEED")) {
    return std::strtoull(env, nullptr, 10);
  }
  return 0;
}

struct GenSpec {
  std::string kind;
  std::vector<std::string> args;
};

GenSpec parse_gen(const std::string& text) {
  GenSpec spec;
  std::stringstream ss(text);
  std::string token;
  bool first = true;
  while (std::getline(ss, token, ':')) {
    if (first) {
      spec.kind = token;
      first = false;
    } else {
      spec.args.push_back(token);
    }
  }
  if (spec.kind.empty()) throw ds::ConfigError("empty --gen specification");
  return spec;
}

double gen_arg(const GenSpec& spec, size_t index, double fallback) {
  if (index >= spec.args.size()) return fallback;
  return std::stod(spec.args[index]);
}

struct CommonOpts {
  std::string input;
  std::string gen;
  std::string out;
  uint64_t seed = default_seed();
  uint64_t trials = 1;
  bool oracle = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--input", opts.input, "stream file (- for stdin)");
  cmd->add_option("--gen", opts.gen, "inline generator kind[:arg[:arg]]");
  cmd->add_option("--out", opts.out, "report file (default stdout)");
  cmd->add_option("--seed", opts.seed, "base RNG seed (env DENSESTREAM_SEED)");
  cmd->add_option("--trials", opts.trials, "seeded trial count")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--oracle", opts.oracle, "run the exact oracle per trial");
  cmd->add_flag("--timing", opts.timing, "fill the wall_ms report column");
}

ds::StreamFile load_stream(const std::string& path) {
  if (path == "-") return ds::parse_stream(std::cin);
  std::ifstream in(path);
  if (!in) throw ds::InputError("cannot open stream file " + path);
  return ds::parse_stream(in);
}

class ReportSink {
 public:
  explicit ReportSink(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw ds::InputError("cannot open report file " + path);
    }
    ds::write_report_header(stream());
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

class Stopwatch {
 public:
  void start() { begin_ = std::chrono::steady_clock::now(); }
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - begin_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point begin_;
};

void warn_skipped(size_t skipped) {
  if (skipped > 0) {
    std::cerr << "warning: " << skipped
              << " stream records did not match the subcommand and were ignored\n";
  }
}

void print_success_summary(uint64_t successes, uint64_t trials) {
  std::cerr << "successes: " << successes << "/" << trials << " ("
            << (trials ? static_cast<double>(successes) / trials : 0.0) << ")\n";
}

// ---- graph subcommands -----------------------------------------------------

struct GraphOpts {
  CommonOpts common;
  uint32_t n = 0;
  double eps = 0.2;
  double alpha = 0.2;
  std::string variant = "f0";
  uint64_t walk = 0;
  double lambda = 0.0;
  std::string trace;
};

ds::StreamFile graph_stream_for_trial(const GraphOpts& opts, uint64_t trial) {
  if (!opts.common.gen.empty()) {
    const GenSpec spec = parse_gen(opts.common.gen);
    const uint64_t seed = opts.common.seed + trial;
    if (opts.n == 0) throw ds::ConfigError("--n is required with --gen");
    if (spec.kind == "erdos-renyi") {
      return ds::gen_erdos_renyi(opts.n, gen_arg(spec, 0, 0.5), seed);
    }
    if (spec.kind == "bip") {
      const uint32_t side =
          static_cast<uint32_t>(gen_arg(spec, 0, std::max(1u, opts.n / 2)));
      return ds::gen_bip(opts.n, side, seed);
    }
    if (spec.kind == "planted-clique") {
      const uint32_t size =
          static_cast<uint32_t>(gen_arg(spec, 0, (2 * opts.n) / 3));
      return ds::gen_planted_clique(opts.n, size, gen_arg(spec, 1, 0.0), seed);
    }
    if (spec.kind == "grr") {
      const uint32_t k = static_cast<uint32_t>(gen_arg(spec, 0, 2));
      return ds::gen_grr(opts.n / 2, k, seed);
    }
    if (spec.kind == "matching-union") {
      const uint32_t k = static_cast<uint32_t>(gen_arg(spec, 0, 2));
      return ds::gen_matching_union(opts.n / 2, k, seed);
    }
    throw ds::ConfigError("unknown graph generator kind '" + spec.kind + "'");
  }
  if (opts.common.input.empty())
    throw ds::ConfigError("one of --input or --gen is required");
  return load_stream(opts.common.input);
}

ds::DenseRunConfig dense_config(const GraphOpts& opts, uint32_t n,
                                uint64_t trial) {
  ds::DenseRunConfig cfg;
  cfg.n = n;
  cfg.eps = opts.eps;
  cfg.alpha = opts.alpha;
  if (opts.variant == "f0") {
    cfg.variant = ds::Variant::kF0;
  } else if (opts.variant == "sampler") {
    cfg.variant = ds::Variant::kSampler;
  } else {
    throw ds::ConfigError("variant must be f0 or sampler");
  }
  cfg.seed = ds::mix64(opts.common.seed + 0x9e37 * trial + 1);
  cfg.sampler_walk_override = opts.walk;
  cfg.sampler_lambda_override = opts.lambda;
  cfg.collect_queries = !opts.trace.empty();
  return cfg;
}

void write_trace(const std::string& path, const std::vector<ds::QueryRow>& rows) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ds::InputError("cannot open trace file " + path);
  out << "solution,estimate\n";
  for (const auto& row : rows)
    out << ds::format_subset_solution(row.solution) << ',' << row.estimate << '\n';
}

int run_maxcut(const GraphOpts& opts) {
  ReportSink sink(opts.common.out);
  uint64_t successes = 0;
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    const ds::StreamFile f = graph_stream_for_trial(opts, trial);
    const uint32_t n = opts.n ? opts.n : f.vertex_count;
    size_t skipped = 0;
    for (const auto& r : f.records) skipped += (r.kind != ds::RecordKind::kEdge);
    warn_skipped(skipped);
    const auto stream = f.encoded_edges(n);

    Stopwatch watch;
    watch.start();
    const ds::DenseRunConfig cfg = dense_config(opts, n, trial);
    const ds::MaxCutResult result = ds::maxcut_dense(stream, cfg);
    const double elapsed = watch.ms();
    write_trace(opts.trace, result.queries);
    if (result.density_warning)
      std::cerr << "warning: stream density below alpha * n^2\n";

    ds::ReportRow row;
    row.algorithm = "maxcut";
    row.n = n;
    row.eps = opts.eps;
    row.alpha = opts.alpha;
    row.variant = opts.variant;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    row.solution = ds::format_cut_solution(result.cut);
    row.estimate = result.value_estimate;
    if (opts.common.oracle) {
      ds::Graph g;
      g.n = n;
      g.edges = stream;
      const double opt = ds::maxcut_brute(g).second;
      const double achieved = ds::cut_value(g, result.cut);
      row.oracle = opt;
      row.success = achieved >= (1.0 - opts.eps) * opt;
      successes += *row.success;
    }
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  if (opts.common.oracle) print_success_summary(successes, opts.common.trials);
  return kExitOk;
}

int run_densest(const GraphOpts& opts) {
  ReportSink sink(opts.common.out);
  uint64_t successes = 0;
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    const ds::StreamFile f = graph_stream_for_trial(opts, trial);
    const uint32_t n = opts.n ? opts.n : f.vertex_count;
    const auto stream = f.encoded_edges(n);

    Stopwatch watch;
    watch.start();
    const ds::DenseRunConfig cfg = dense_config(opts, n, trial);
    const ds::DensestResult result = ds::densest_dense(stream, cfg);
    const double elapsed = watch.ms();
    write_trace(opts.trace, result.queries);
    if (result.density_warning)
      std::cerr << "warning: stream density below alpha * n^2\n";

    ds::ReportRow row;
    row.algorithm = "densest";
    row.n = n;
    row.eps = opts.eps;
    row.alpha = opts.alpha;
    row.variant = opts.variant;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    row.solution = ds::format_subset_solution(result.subset);
    row.estimate = result.density_estimate;
    if (opts.common.oracle) {
      ds::Graph g;
      g.n = n;
      g.edges = stream;
      const double best_density = ds::densest_brute(g).second;
      const ds::EdgeUniverse u(n);
      uint64_t inner = 0;
      for (uint64_t e : g.distinct_edges()) {
        const auto [a, b] = u.decode(e);
        inner += ((result.subset >> a) & 1) && ((result.subset >> b) & 1);
      }
      const double achieved =
          result.subset == 0
              ? 0.0
              : static_cast<double>(inner) /
                    static_cast<double>(std::popcount(result.subset));
      row.oracle = best_density;
      row.success = achieved >= (1.0 - opts.eps) * best_density;
      successes += *row.success;
    }
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  if (opts.common.oracle) print_success_summary(successes, opts.common.trials);
  return kExitOk;
}

// ---- csp --------------------------------------------------------------------

struct CspOpts {
  CommonOpts common;
  uint32_t n = 6;
  uint32_t k = 2;
  uint32_t q = 2;
  uint64_t m = 0;
  double eps = 0.3;
  double alpha = 0.3;
  std::string variant = "f0";
  uint64_t walk = 0;
  double lambda = 0.0;
};

int run_csp(const CspOpts& opts) {
  const ds::CspShape shape{opts.n, opts.k, opts.q};
  ReportSink sink(opts.common.out);
  uint64_t successes = 0;
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    ds::StreamFile f;
    if (!opts.common.gen.empty()) {
      const GenSpec spec = parse_gen(opts.common.gen);
      if (spec.kind != "csp-random")
        throw ds::ConfigError("csp supports --gen csp-random[:m]");
      const uint64_t m =
          opts.m ? opts.m
                 : static_cast<uint64_t>(gen_arg(spec, 0, 0.5 * opts.n * opts.n));
      f = ds::gen_csp_random(shape, m, opts.common.seed + trial);
    } else if (!opts.common.input.empty()) {
      f = load_stream(opts.common.input);
    } else {
      throw ds::ConfigError("one of --input or --gen is required");
    }
    const auto stream = f.constraint_ids();
    warn_skipped(f.records.size() - stream.size());

    ds::DenseRunConfig cfg;
    cfg.n = opts.n;
    cfg.eps = opts.eps;
    cfg.alpha = opts.alpha;
    cfg.variant =
        opts.variant == "sampler" ? ds::Variant::kSampler : ds::Variant::kF0;
    cfg.seed = ds::mix64(opts.common.seed + 0x9e37 * trial + 1);
    cfg.sampler_walk_override = opts.walk;
    cfg.sampler_lambda_override = opts.lambda;

    Stopwatch watch;
    watch.start();
    const ds::CspResult result = ds::csp_dense(stream, shape, cfg);
    const double elapsed = watch.ms();
    if (result.density_warning)
      std::cerr << "warning: stream density below alpha * n^k\n";

    ds::ReportRow row;
    row.algorithm = "csp";
    row.n = opts.n;
    row.k = opts.k;
    row.q = opts.q;
    row.eps = opts.eps;
    row.alpha = opts.alpha;
    row.variant = opts.variant;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    row.solution = ds::format_assignment_solution(result.assignment);
    row.estimate = result.value_estimate;
    if (opts.common.oracle) {
      ds::CspInstance phi;
      phi.shape = shape;
      for (uint64_t id : stream)
        phi.constraints.push_back(ds::decode_constraint(id, shape));
      const double best = ds::csp_brute(phi).second;
      const double achieved = ds::csp_value(phi, result.assignment);
      row.oracle = best;
      row.success = achieved >= (1.0 - opts.eps) * best;
      successes += *row.success;
    }
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  if (opts.common.oracle) print_success_summary(successes, opts.common.trials);
  return kExitOk;
}

// ---- similarity / rarity / f0 / sample ---------------------------------------

struct ElementOpts {
  CommonOpts common;
  uint64_t universe = 0;
  double eps = 0.15;
  double alpha = 0.4;
  std::string algo = "perm";  // similarity only
  uint32_t k = 1;             // rarity only
  double delta = 1.0 / 9.0;   // f0 only
  std::string save_sketch;    // f0 only
  std::string load_sketch;    // f0 only
  uint64_t walk = 1024;       // sample only
  double lambda = 0.1;        // sample only
  int32_t cap = 255;          // sample only
};

ds::StreamFile element_stream_for_trial(const ElementOpts& opts, uint64_t trial,
                                        const char* subcommand) {
  if (!opts.common.gen.empty()) {
    const GenSpec spec = parse_gen(opts.common.gen);
    const uint64_t seed = opts.common.seed + trial;
    if (opts.universe == 0)
      throw ds::ConfigError("--universe is required with --gen");
    if (spec.kind == "distinct") {
      return ds::gen_distinct(opts.universe,
                              static_cast<uint64_t>(gen_arg(spec, 0, 1000)),
                              seed);
    }
    if (spec.kind == "multiplicity-profile" || spec.kind == "profile") {
      return ds::gen_multiplicity_profile(
          opts.universe, static_cast<uint64_t>(gen_arg(spec, 0, 1000)),
          static_cast<uint32_t>(gen_arg(spec, 1, 4)), seed);
    }
    if (spec.kind == "similarity") {
      return ds::gen_similarity(
          opts.universe,
          static_cast<uint64_t>(gen_arg(spec, 0, opts.universe / 2)),
          gen_arg(spec, 1, 0.5), seed);
    }
    throw ds::ConfigError(std::string("unknown generator for ") + subcommand +
                          ": '" + spec.kind + "'");
  }
  if (opts.common.input.empty())
    throw ds::ConfigError("one of --input or --gen is required");
  return load_stream(opts.common.input);
}

int run_similarity(const ElementOpts& opts) {
  ReportSink sink(opts.common.out);
  uint64_t successes = 0;
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    const ds::StreamFile f = element_stream_for_trial(opts, trial, "similarity");
    const uint64_t universe =
        opts.universe ? opts.universe : std::max<uint64_t>(f.element_count, 2);

    std::set<uint64_t> set_a, set_b;
    Stopwatch watch;
    watch.start();
    double estimate = 0.0;
    bool undefined = false;
    const uint64_t algo_seed = ds::mix64(opts.common.seed + trial + 0xabc);
    try {
      if (opts.algo == "f0") {
        ds::SimilarityF0 sim(universe, opts.eps, algo_seed);
        for (const auto& r : f.records) {
          if (r.kind == ds::RecordKind::kSetA) {
            sim.insert_a(r.a);
            set_a.insert(r.a);
          } else if (r.kind == ds::RecordKind::kSetB) {
            sim.insert_b(r.a);
            set_b.insert(r.a);
          }
        }
        estimate = sim.estimate();
      } else if (opts.algo == "perm") {
        ds::WindowParams params;
        params.universe_size = universe;
        params.eps = opts.eps;
        params.alpha = opts.alpha;
        params.seed = algo_seed;
        ds::SimilarityWindow sim(params);
        for (const auto& r : f.records) {
          if (r.kind == ds::RecordKind::kSetA) {
            sim.insert_a(r.a);
            set_a.insert(r.a);
          } else if (r.kind == ds::RecordKind::kSetB) {
            sim.insert_b(r.a);
            set_b.insert(r.a);
          }
        }
        estimate = sim.estimate();
      } else {
        throw ds::ConfigError("similarity --algo must be f0 or perm");
      }
    } catch (const ds::UndefinedError& e) {
      std::cerr << "trial " << trial << " aborted: " << e.what() << "\n";
      undefined = true;
    }
    const double elapsed = watch.ms();

    ds::ReportRow row;
    row.algorithm = "similarity";
    row.n = universe;
    row.eps = opts.eps;
    row.alpha = opts.alpha;
    row.variant = opts.algo;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    if (!undefined) row.estimate = estimate;
    if (opts.common.oracle && !undefined) {
      std::set<uint64_t> all(set_a.begin(), set_a.end());
      all.insert(set_b.begin(), set_b.end());
      uint64_t inter = 0;
      for (uint64_t e : set_a) inter += set_b.count(e);
      if (!all.empty()) {
        const double truth =
            static_cast<double>(inter) / static_cast<double>(all.size());
        row.oracle = truth;
        row.success = std::abs(estimate - truth) <= opts.eps;
        successes += *row.success;
      }
    }
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  if (opts.common.oracle) print_success_summary(successes, opts.common.trials);
  return kExitOk;
}

int run_rarity(const ElementOpts& opts) {
  ReportSink sink(opts.common.out);
  uint64_t successes = 0;
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    const ds::StreamFile f = element_stream_for_trial(opts, trial, "rarity");
    const uint64_t universe =
        opts.universe ? opts.universe : std::max<uint64_t>(f.element_count, 2);

    ds::WindowParams params;
    params.universe_size = universe;
    params.eps = opts.eps;
    params.alpha = opts.alpha;
    params.seed = ds::mix64(opts.common.seed + trial + 0xdef);
    ds::RarityWindow window(params, opts.k);

    std::unordered_map<uint64_t, uint64_t> counts;
    Stopwatch watch;
    watch.start();
    double estimate = 0.0;
    bool undefined = false;
    for (const auto& r : f.records) {
      if (r.kind != ds::RecordKind::kElement) continue;
      window.insert(r.a);
      ++counts[r.a];
    }
    try {
      estimate = window.estimate();
    } catch (const ds::UndefinedError& e) {
      std::cerr << "trial " << trial << " aborted: " << e.what() << "\n";
      undefined = true;
    }
    const double elapsed = watch.ms();

    ds::ReportRow row;
    row.algorithm = "rarity";
    row.n = universe;
    row.k = opts.k;
    row.eps = opts.eps;
    row.alpha = opts.alpha;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    if (!undefined) row.estimate = estimate;
    if (opts.common.oracle && !undefined && !counts.empty()) {
      uint64_t exactly_k = 0;
      for (const auto& [e, c] : counts) exactly_k += (c == opts.k);
      const double truth =
          static_cast<double>(exactly_k) / static_cast<double>(counts.size());
      row.oracle = truth;
      row.success = std::abs(estimate - truth) <= opts.eps;
      successes += *row.success;
    }
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  if (opts.common.oracle) print_success_summary(successes, opts.common.trials);
  return kExitOk;
}

int run_f0(const ElementOpts& opts) {
  if (!opts.load_sketch.empty() && opts.common.oracle)
    throw ds::ConfigError(
        "--oracle cannot verify a resumed sketch (prior elements unknown)");
  ReportSink sink(opts.common.out);
  uint64_t successes = 0;
  std::vector<double> rel_errors;
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    const ds::StreamFile f = element_stream_for_trial(opts, trial, "f0");
    const uint64_t universe =
        opts.universe ? opts.universe : std::max<uint64_t>(f.element_count, 2);

    ds::F0Sketch sketch = [&] {
      if (!opts.load_sketch.empty()) {
        std::ifstream in(opts.load_sketch, std::ios::binary);
        if (!in) throw ds::InputError("cannot open sketch " + opts.load_sketch);
        return ds::F0Sketch::load(in);
      }
      return ds::F0Sketch({opts.eps, opts.delta, universe},
                          ds::mix64(opts.common.seed + trial + 0xf0));
    }();
    std::set<uint64_t> exact;
    Stopwatch watch;
    watch.start();
    for (const auto& r : f.records) {
      if (r.kind != ds::RecordKind::kElement) continue;
      sketch.insert(r.a);
      exact.insert(r.a);
    }
    const double estimate = sketch.estimate();
    const double elapsed = watch.ms();
    if (!opts.save_sketch.empty()) {
      std::ofstream out(opts.save_sketch, std::ios::binary);
      if (!out) throw ds::InputError("cannot open sketch " + opts.save_sketch);
      sketch.save(out);
    }

    ds::ReportRow row;
    row.algorithm = "f0";
    row.n = universe;
    row.eps = opts.eps;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    row.estimate = estimate;
    if (opts.common.oracle && !exact.empty()) {
      const double truth = static_cast<double>(exact.size());
      row.oracle = truth;
      const double rel = std::abs(estimate - truth) / truth;
      rel_errors.push_back(rel);
      row.success = rel <= opts.eps;
      successes += *row.success;
    }
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  if (opts.common.oracle) {
    print_success_summary(successes, opts.common.trials);
    if (!rel_errors.empty()) {
      std::sort(rel_errors.begin(), rel_errors.end());
      auto q = [&](double p) {
        return rel_errors[static_cast<size_t>(p * (rel_errors.size() - 1))];
      };
      std::cerr << "relative error quantiles: p50=" << q(0.5) << " p90=" << q(0.9)
                << " p99=" << q(0.99) << "\n";
    }
  }
  return kExitOk;
}

int run_sample(const ElementOpts& opts) {
  ReportSink sink(opts.common.out);
  for (uint64_t trial = 0; trial < opts.common.trials; ++trial) {
    const ds::StreamFile f = element_stream_for_trial(opts, trial, "sample");
    const uint64_t universe =
        opts.universe ? opts.universe : std::max<uint64_t>(f.element_count, 2);

    ds::SamplerConfig cfg;
    cfg.universe_size = universe;
    cfg.walk_length = opts.walk;
    cfg.lambda = opts.lambda;
    cfg.multiplicity_cap = opts.cap;
    cfg.seed = ds::mix64(opts.common.seed + trial + 0x5a);
    ds::DenseSampler sampler(cfg);

    Stopwatch watch;
    watch.start();
    for (const auto& r : f.records) {
      if (r.kind == ds::RecordKind::kElement) sampler.insert(r.a);
    }
    sampler.finalize();
    double estimate = 0.0;
    if (sampler.stream_size() > 0)
      estimate = sampler.estimate([](uint64_t) { return 1.0; });
    const double elapsed = watch.ms();
    std::cerr << "stream size " << sampler.stream_size() << ", "
              << sampler.sample_weights().size() << " distinct sampled, chunk "
              << sampler.chunk_size() << "\n";

    ds::ReportRow row;
    row.algorithm = "sample";
    row.n = universe;
    row.eps = opts.lambda;
    row.seed = opts.common.seed + trial;
    row.trial = trial;
    row.estimate = estimate;  // mean of the constant-1 function, about 1
    if (opts.common.timing) row.wall_ms = elapsed;
    ds::write_report_row(sink.stream(), row);
  }
  return kExitOk;
}

// ---- hardlab ------------------------------------------------------------------

struct HardlabOpts {
  CommonOpts common;
  std::string experiment;
  uint32_t n = 16;
  uint32_t k = 4;
  double delta = 0.1;
  double tau = 0.0;
  uint32_t restarts = 32;
};

void hardlab_row(std::ostream& out, const std::string& experiment,
                 uint64_t trial, uint64_t instance, uint32_t n, uint32_t k,
                 double measured, double reference, const std::string& extra) {
  out << experiment << ',' << trial << ',' << instance << ',' << n << ',' << k
      << ',' << measured << ',' << reference << ',' << extra << '\n';
}

int run_hardlab(const HardlabOpts& opts) {
  std::ofstream file;
  if (!opts.common.out.empty()) {
    file.open(opts.common.out);
    if (!file) throw ds::InputError("cannot open report file " + opts.common.out);
  }
  std::ostream& out = file.is_open() ? file : std::cout;
  out << "experiment,trial,instance_hash,n,k,measured,reference,extra\n";

  ds::Rng rng(opts.common.seed);
  const uint32_t n = opts.n, k = opts.k;
  if (opts.experiment == "grr") {
    for (uint64_t t = 0; t < opts.common.trials; ++t) {
      const ds::BipartiteInstance g1 = ds::grr_sample(n, k, rng);
      const ds::BipartiteInstance g2 = ds::grr_sample(n, k, rng);
      uint64_t deg_sq = 0;
      for (uint32_t d : g1.left_degrees()) deg_sq += uint64_t{d} * d;
      hardlab_row(out, "grr-degsq", t, ds::instance_hash(g1), n, k,
                  static_cast<double>(deg_sq),
                  static_cast<double>(n) * (k + static_cast<double>(k) * k), "");
      hardlab_row(out, "grr-overlap", t, ds::instance_hash(g2), n, k,
                  static_cast<double>(ds::edge_overlap(g1, g2)),
                  static_cast<double>(k) * k, "");
    }
    return kExitOk;
  }
  if (opts.experiment == "valuegap") {
    for (uint64_t t = 0; t < opts.common.trials; ++t) {
      const ds::BipartiteInstance a1 = ds::matching_union_sample(n, k, rng);
      const ds::BipartiteInstance a2 = ds::matching_union_sample(n, k, rng);
      const ds::ValueGapResult r =
          ds::value_gap_experiment(a1, a2, opts.restarts, rng);
      hardlab_row(out, "valuegap", t, ds::instance_hash(a1), n, k, r.best.gap,
                  r.khintchine_floor, "diff=" + std::to_string(r.diff_size));
    }
    return kExitOk;
  }
  if (opts.experiment == "gadget") {
    for (uint64_t t = 0; t < opts.common.trials; ++t) {
      const ds::BipartiteInstance b = ds::matching_union_sample(n, k, rng);
      ds::Multigraph a;
      a.n = 2 * n;
      for (const auto& [u, v] : b.edges) a.edges.emplace_back(u, n + v);
      std::vector<int8_t> x(a.n);
      for (auto& v : x) v = (rng() & 1) ? 1 : -1;
      uint64_t x_bits = 0;
      for (uint32_t v = 0; v < a.n; ++v) {
        if (x[v] > 0) x_bits |= 1ULL << v;
      }
      const auto [cut, opt] = ds::weighted_maxcut_brute(ds::gadget_det(a, x));
      const double reference = 5000.0 * a.n * k + 100.0 * a.n * k +
                               static_cast<double>(ds::cutweight(a, x_bits));
      hardlab_row(out, "gadget", t, ds::instance_hash(b), a.n, k,
                  static_cast<double>(opt), reference, "");
    }
    return kExitOk;
  }
  if (opts.experiment == "rademacher") {
    for (uint32_t m : {16u, 64u, 256u}) {
      const double mean = ds::rademacher_min_mean(
          m, static_cast<uint32_t>(opts.common.trials), rng);
      hardlab_row(out, "rademacher", m, 0, m, 0, mean,
                  (9.0 / 512.0) * std::sqrt(static_cast<double>(m)), "");
    }
    return kExitOk;
  }
  if (opts.experiment == "sharedgood") {
    const double tau = opts.tau > 0.0 ? opts.tau : ds::HardFamilyParams::tau(n, k);
    for (uint64_t t = 0; t < opts.common.trials; ++t) {
      const ds::BipartiteInstance g1 = ds::grr_sample(n, k, rng);
      const ds::BipartiteInstance g2 = ds::grr_sample(n, k, rng);
      std::vector<int8_t> x(n);
      for (auto& v : x) v = (rng() & 1) ? 1 : -1;
      const auto r = ds::check_shared_good(g1, g2, x, tau);
      hardlab_row(out, "sharedgood", t, ds::instance_hash(g1), n, k,
                  r.advantage_sum, 4.0 * tau, r.exists ? "shared=1" : "shared=0");
    }
    return kExitOk;
  }
  if (opts.experiment == "hamming") {
    const ds::HammingFamily family =
        ds::hamming_family(n, opts.delta, opts.common.trials, opts.common.seed);
    hardlab_row(out, "hamming", 0, 0, n, 0,
                static_cast<double>(family.strings.size()),
                static_cast<double>(family.sampled),
                "collisions=" + std::to_string(family.collision_removals));
    return kExitOk;
  }
  throw ds::ConfigError("unknown hardlab experiment '" + opts.experiment + "'");
}

// ---- generate -----------------------------------------------------------------

struct GenerateOpts {
  std::string kind;
  std::string out;
  uint64_t seed = default_seed();
  uint32_t n = 10;
  uint32_t k = 2;
  uint32_t q = 2;
  uint64_t m = 0;
  double density = 0.5;
  uint32_t size = 0;
  uint64_t universe = 0;
  uint64_t distinct = 1000;
  uint32_t max_mult = 4;
  uint64_t union_size = 0;
  double jaccard = 0.5;
};

int run_generate(const GenerateOpts& opts) {
  ds::StreamFile f;
  if (opts.kind == "erdos-renyi") {
    f = ds::gen_erdos_renyi(opts.n, opts.density, opts.seed);
  } else if (opts.kind == "bip") {
    f = ds::gen_bip(opts.n, opts.size ? opts.size : opts.n / 2, opts.seed);
  } else if (opts.kind == "planted-clique") {
    f = ds::gen_planted_clique(opts.n, opts.size ? opts.size : (2 * opts.n) / 3,
                               opts.density, opts.seed);
  } else if (opts.kind == "grr") {
    f = ds::gen_grr(opts.n, opts.k, opts.seed);
  } else if (opts.kind == "matching-union") {
    f = ds::gen_matching_union(opts.n, opts.k, opts.seed);
  } else if (opts.kind == "csp-random") {
    const ds::CspShape shape{opts.n, opts.k, opts.q};
    f = ds::gen_csp_random(shape, opts.m ? opts.m : opts.n * opts.n / 2,
                           opts.seed);
  } else if (opts.kind == "multiplicity-profile") {
    f = ds::gen_multiplicity_profile(opts.universe ? opts.universe : 10000,
                                     opts.distinct, opts.max_mult, opts.seed);
  } else if (opts.kind == "distinct") {
    f = ds::gen_distinct(opts.universe ? opts.universe : 1 << 20, opts.distinct,
                         opts.seed);
  } else if (opts.kind == "similarity") {
    const uint64_t universe = opts.universe ? opts.universe : 10000;
    f = ds::gen_similarity(universe,
                           opts.union_size ? opts.union_size : universe / 2,
                           opts.jaccard, opts.seed);
  } else {
    throw ds::ConfigError("unknown generator kind '" + opts.kind + "'");
  }

  if (opts.out.empty()) {
    ds::write_stream(std::cout, f);
  } else {
    std::ofstream out(opts.out);
    if (!out) throw ds::InputError("cannot open output file " + opts.out);
    ds::write_stream(out, f);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dense-stream sketching and approximation toolkit"};
  app.require_subcommand(1);

  GraphOpts maxcut_opts;
  CLI::App* maxcut = app.add_subcommand("maxcut", "approximate maximum cut");
  add_common(maxcut, maxcut_opts.common);
  maxcut->add_option("--n", maxcut_opts.n, "vertex count");
  maxcut->add_option("--eps", maxcut_opts.eps, "approximation target");
  maxcut->add_option("--alpha", maxcut_opts.alpha, "density lower bound");
  maxcut->add_option("--variant", maxcut_opts.variant, "f0 or sampler");
  maxcut->add_option("--walk", maxcut_opts.walk, "sampler walk length override");
  maxcut->add_option("--lambda", maxcut_opts.lambda, "sampler spectral override");
  maxcut->add_option("--trace", maxcut_opts.trace, "per-cut estimate CSV");

  GraphOpts densest_opts;
  CLI::App* densest = app.add_subcommand("densest", "approximate densest subgraph");
  add_common(densest, densest_opts.common);
  densest->add_option("--n", densest_opts.n, "vertex count");
  densest->add_option("--eps", densest_opts.eps, "approximation target");
  densest->add_option("--alpha", densest_opts.alpha, "density lower bound");
  densest->add_option("--variant", densest_opts.variant, "f0 or sampler");
  densest->add_option("--walk", densest_opts.walk, "sampler walk length override");
  densest->add_option("--lambda", densest_opts.lambda, "sampler spectral override");
  densest->add_option("--trace", densest_opts.trace, "per-subset estimate CSV");

  CspOpts csp_opts;
  CLI::App* csp = app.add_subcommand("csp", "approximate max-csp");
  add_common(csp, csp_opts.common);
  csp->add_option("--n", csp_opts.n, "variable count");
  csp->add_option("--k", csp_opts.k, "constraint arity");
  csp->add_option("--q", csp_opts.q, "alphabet size");
  csp->add_option("--m", csp_opts.m, "generated constraint count");
  csp->add_option("--eps", csp_opts.eps, "approximation target");
  csp->add_option("--alpha", csp_opts.alpha, "density lower bound");
  csp->add_option("--variant", csp_opts.variant, "f0 or sampler");
  csp->add_option("--walk", csp_opts.walk, "sampler walk length override");
  csp->add_option("--lambda", csp_opts.lambda, "sampler spectral override");

  ElementOpts sim_opts;
  CLI::App* sim = app.add_subcommand("similarity", "jaccard similarity estimate");
  add_common(sim, sim_opts.common);
  sim->add_option("--universe", sim_opts.universe, "element universe size");
  sim->add_option("--eps", sim_opts.eps, "additive error target");
  sim->add_option("--alpha", sim_opts.alpha, "union density lower bound");
  sim->add_option("--algo", sim_opts.algo, "f0 or perm");

  ElementOpts rare_opts;
  CLI::App* rare = app.add_subcommand("rarity", "k-rarity estimate");
  add_common(rare, rare_opts.common);
  rare->add_option("--universe", rare_opts.universe, "element universe size");
  rare->add_option("--eps", rare_opts.eps, "additive error target");
  rare->add_option("--alpha", rare_opts.alpha, "distinct density lower bound");
  rare->add_option("--k", rare_opts.k, "target multiplicity");

  ElementOpts f0_opts;
  CLI::App* f0 = app.add_subcommand("f0", "distinct elements estimate");
  add_common(f0, f0_opts.common);
  f0->add_option("--universe", f0_opts.universe, "element universe size");
  f0->add_option("--eps", f0_opts.eps, "relative error target");
  f0->add_option("--delta", f0_opts.delta, "failure probability");
  f0->add_option("--save-sketch", f0_opts.save_sketch,
                 "write the sketch state after the stream");
  f0->add_option("--load-sketch", f0_opts.load_sketch,
                 "resume from a saved sketch state");

  ElementOpts sample_opts;
  CLI::App* sample = app.add_subcommand("sample", "expander-walk subsampler");
  add_common(sample, sample_opts.common);
  sample->add_option("--universe", sample_opts.universe, "element universe size");
  sample->add_option("--t", sample_opts.walk, "walk length");
  sample->add_option("--lambda", sample_opts.lambda, "spectral target");
  sample->add_option("--cap", sample_opts.cap, "multiplicity cap");

  HardlabOpts hard_opts;
  CLI::App* hard = app.add_subcommand("hardlab", "lower-bound experiments");
  add_common(hard, hard_opts.common);
  hard->add_option("--exp", hard_opts.experiment,
                   "grr | valuegap | gadget | rademacher | sharedgood | hamming")
      ->required();
  hard->add_option("--n", hard_opts.n, "side size");
  hard->add_option("--k", hard_opts.k, "regularity");
  hard->add_option("--delta", hard_opts.delta, "hamming ball radius");
  hard->add_option("--tau", hard_opts.tau, "goodness threshold");
  hard->add_option("--restarts", hard_opts.restarts, "value-gap restarts");

  GenerateOpts gen_opts;
  CLI::App* gen = app.add_subcommand("generate", "write a stream file");
  gen->add_option("--kind", gen_opts.kind, "generator kind")->required();
  gen->add_option("--out", gen_opts.out, "output file (default stdout)");
  gen->add_option("--seed", gen_opts.seed, "RNG seed");
  gen->add_option("--n", gen_opts.n, "vertex / variable count");
  gen->add_option("--k", gen_opts.k, "regularity or arity");
  gen->add_option("--q", gen_opts.q, "alphabet size");
  gen->add_option("--m", gen_opts.m, "constraint count");
  gen->add_option("--density", gen_opts.density, "edge density");
  gen->add_option("--size", gen_opts.size, "side or clique size");
  gen->add_option("--universe", gen_opts.universe, "element universe size");
  gen->add_option("--distinct", gen_opts.distinct, "distinct element count");
  gen->add_option("--max-mult", gen_opts.max_mult, "maximum multiplicity");
  gen->add_option("--union", gen_opts.union_size, "similarity union size");
  gen->add_option("--jaccard", gen_opts.jaccard, "similarity target");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*maxcut) return run_maxcut(maxcut_opts);
    if (*densest) return run_densest(densest_opts);
    if (*csp) return run_csp(csp_opts);
    if (*sim) return run_similarity(sim_opts);
    if (*rare) return run_rarity(rare_opts);
    if (*f0) return run_f0(f0_opts);
    if (*sample) return run_sample(sample_opts);
    if (*hard) return run_hardlab(hard_opts);
    if (*gen) return run_generate(gen_opts);
  } catch (const ds::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const ds::CapError& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ds::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ds::UndefinedError& e) {
    std::cerr << "undefined result: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
