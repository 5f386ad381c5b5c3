#include "densestream/stream_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace densestream {

std::vector<uint64_t> StreamFile::encoded_edges(uint32_t n) const {
  const EdgeUniverse universe(n);
  std::vector<uint64_t> out;
  for (const auto& r : records) {
    if (r.kind != RecordKind::kEdge) continue;
    out.push_back(universe.encode(static_cast<uint32_t>(r.a),
                                  static_cast<uint32_t>(r.b)));
  }
  return out;
}

std::vector<uint64_t> StreamFile::constraint_ids() const {
  std::vector<uint64_t> out;
  for (const auto& r : records) {
    if (r.kind == RecordKind::kConstraint) out.push_back(r.a);
  }
  return out;
}

namespace {

uint64_t parse_u64(const std::string& token, size_t line_no) {
  uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw InputError("stream line " + std::to_string(line_no) +
                     ": bad integer '" + token + "'");
  return value;
}

}  // namespace

StreamFile parse_stream(std::istream& in) {
  StreamFile out;
  std::unordered_map<uint64_t, uint32_t> vertex_ids;
  std::unordered_map<uint64_t, uint64_t> element_ids;
  auto vertex_of = [&](uint64_t label) {
    auto [it, fresh] = vertex_ids.try_emplace(
        label, static_cast<uint32_t>(vertex_ids.size()));
    return it->second;
  };
  auto element_of = [&](uint64_t label) {
    auto [it, fresh] =
        element_ids.try_emplace(label, element_ids.size());
    return it->second;
  };

  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string tag;
    if (!(fields >> tag) || tag[0] == '#') continue;
    std::string t1, t2;
    StreamRecord rec;
    if (tag == "e") {
      if (!(fields >> t1 >> t2))
        throw InputError("stream line " + std::to_string(line_no) +
                         ": edge record needs two endpoints");
      rec.kind = RecordKind::kEdge;
      rec.a = vertex_of(parse_u64(t1, line_no));
      rec.b = vertex_of(parse_u64(t2, line_no));
    } else if (tag == "a" || tag == "b" || tag == "r") {
      if (!(fields >> t1))
        throw InputError("stream line " + std::to_string(line_no) +
                         ": element record needs one id");
      rec.kind = tag == "a"   ? RecordKind::kSetA
                 : tag == "b" ? RecordKind::kSetB
                              : RecordKind::kElement;
      rec.a = element_of(parse_u64(t1, line_no));
    } else if (tag == "c") {
      if (!(fields >> t1))
        throw InputError("stream line " + std::to_string(line_no) +
                         ": constraint record needs one id");
      rec.kind = RecordKind::kConstraint;
      rec.a = parse_u64(t1, line_no);
    } else {
      throw InputError("stream line " + std::to_string(line_no) +
                       ": unknown record tag '" + tag + "'");
    }
    std::string extra;
    if (fields >> extra)
      throw InputError("stream line " + std::to_string(line_no) +
                       ": trailing token '" + extra + "'");
    out.records.push_back(rec);
  }
  out.vertex_count = static_cast<uint32_t>(vertex_ids.size());
  out.element_count = element_ids.size();
  return out;
}

void write_stream(std::ostream& out, const StreamFile& stream) {
  for (const auto& r : stream.records) {
    switch (r.kind) {
      case RecordKind::kEdge: out << "e " << r.a << ' ' << r.b << '\n'; break;
      case RecordKind::kSetA: out << "a " << r.a << '\n'; break;
      case RecordKind::kSetB: out << "b " << r.a << '\n'; break;
      case RecordKind::kElement: out << "r " << r.a << '\n'; break;
      case RecordKind::kConstraint: out << "c " << r.a << '\n'; break;
    }
  }
}

namespace {

void push_edge(StreamFile& f, uint32_t u, uint32_t v) {
  f.records.push_back({RecordKind::kEdge, u, v});
}

void track_vertices(StreamFile& f, uint32_t n) { f.vertex_count = n; }

std::vector<uint32_t> random_subset(uint32_t n, uint32_t size, Rng& rng) {
  if (size > n) throw ConfigError("subset size exceeds ground set");
  std::vector<uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (uint32_t i = 0; i < size; ++i) {
    const uint64_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(size);
  return pool;
}

void shuffle_records(StreamFile& f, Rng& rng) {
  for (size_t i = f.records.size(); i > 1; --i) {
    const uint64_t j = uniform_below(rng, i);
    std::swap(f.records[i - 1], f.records[j]);
  }
}

}  // namespace

StreamFile gen_erdos_renyi(uint32_t n, double density, uint64_t seed) {
  if (n < 2) throw ConfigError("erdos-renyi needs n >= 2");
  if (!(density >= 0.0 && density <= 1.0))
    throw ConfigError("erdos-renyi density must lie in [0, 1]");
  Rng rng(seed);
  StreamFile f;
  for (uint32_t u = 0; u + 1 < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      if (uniform_double(rng) < density) push_edge(f, u, v);
    }
  }
  track_vertices(f, n);
  return f;
}

StreamFile gen_bip(uint32_t n, uint32_t side_size, uint64_t seed) {
  if (n < 2) throw ConfigError("bip needs n >= 2");
  if (side_size == 0 || side_size >= n)
    throw ConfigError("bip side must be nonempty and proper");
  Rng rng(seed);
  const auto side = random_subset(n, side_size, rng);
  std::vector<bool> in_side(n, false);
  for (uint32_t u : side) in_side[u] = true;
  StreamFile f;
  for (uint32_t u = 0; u < n; ++u) {
    if (!in_side[u]) continue;
    for (uint32_t v = 0; v < n; ++v) {
      if (!in_side[v]) push_edge(f, u, v);
    }
  }
  shuffle_records(f, rng);
  track_vertices(f, n);
  return f;
}

StreamFile gen_planted_clique(uint32_t n, uint32_t clique_size,
                              double noise_density, uint64_t seed) {
  if (clique_size < 2 || clique_size > n)
    throw ConfigError("planted clique size must lie in [2, n]");
  Rng rng(seed);
  const auto members = random_subset(n, clique_size, rng);
  std::vector<bool> in_clique(n, false);
  for (uint32_t u : members) in_clique[u] = true;
  StreamFile f;
  for (uint32_t u = 0; u + 1 < n; ++u) {
    for (uint32_t v = u + 1; v < n; ++v) {
      if ((in_clique[u] && in_clique[v]) || uniform_double(rng) < noise_density)
        push_edge(f, u, v);
    }
  }
  shuffle_records(f, rng);
  track_vertices(f, n);
  return f;
}

namespace {

StreamFile bipartite_to_stream(const BipartiteInstance& g) {
  StreamFile f;
  for (const auto& [u, v] : g.edges) push_edge(f, u, g.left_size + v);
  track_vertices(f, g.left_size + g.right_size);
  return f;
}

}  // namespace

StreamFile gen_grr(uint32_t n, uint32_t k, uint64_t seed) {
  Rng rng(seed);
  return bipartite_to_stream(grr_sample(n, k, rng));
}

StreamFile gen_matching_union(uint32_t n, uint32_t k, uint64_t seed) {
  Rng rng(seed);
  return bipartite_to_stream(matching_union_sample(n, k, rng));
}

StreamFile gen_csp_random(const CspShape& shape, uint64_t m, uint64_t seed) {
  const uint64_t universe = shape.universe_size();
  if (m > universe) throw ConfigError("more constraints than the universe holds");
  Rng rng(seed);
  std::unordered_set<uint64_t> seen;
  StreamFile f;
  while (seen.size() < m) {
    const uint64_t id = uniform_below(rng, universe);
    if (seen.insert(id).second)
      f.records.push_back({RecordKind::kConstraint, id, 0});
  }
  return f;
}

StreamFile gen_multiplicity_profile(uint64_t universe, uint64_t distinct,
                                    uint32_t max_multiplicity, uint64_t seed) {
  if (distinct > universe) throw ConfigError("distinct count exceeds universe");
  if (max_multiplicity == 0) throw ConfigError("max multiplicity must be positive");
  Rng rng(seed);
  std::unordered_set<uint64_t> seen;
  StreamFile f;
  while (seen.size() < distinct) {
    const uint64_t e = uniform_below(rng, universe);
    if (!seen.insert(e).second) continue;
    const uint64_t copies = 1 + uniform_below(rng, max_multiplicity);
    for (uint64_t i = 0; i < copies; ++i)
      f.records.push_back({RecordKind::kElement, e, 0});
  }
  shuffle_records(f, rng);
  f.element_count = universe;
  return f;
}

StreamFile gen_distinct(uint64_t universe, uint64_t count, uint64_t seed) {
  if (count > universe) throw ConfigError("distinct count exceeds universe");
  Rng rng(seed);
  std::unordered_set<uint64_t> seen;
  StreamFile f;
  while (seen.size() < count) {
    const uint64_t e = uniform_below(rng, universe);
    if (seen.insert(e).second) f.records.push_back({RecordKind::kElement, e, 0});
  }
  f.element_count = universe;
  return f;
}

StreamFile gen_similarity(uint64_t universe, uint64_t union_size,
                          double jaccard, uint64_t seed) {
  if (union_size > universe) throw ConfigError("union exceeds universe");
  if (!(jaccard >= 0.0 && jaccard <= 1.0))
    throw ConfigError("jaccard target must lie in [0, 1]");
  Rng rng(seed);
  std::unordered_set<uint64_t> seen;
  std::vector<uint64_t> members;
  while (members.size() < union_size) {
    const uint64_t e = uniform_below(rng, universe);
    if (seen.insert(e).second) members.push_back(e);
  }
  const uint64_t inter =
      static_cast<uint64_t>(jaccard * static_cast<double>(union_size) + 0.5);
  const uint64_t rest = union_size - inter;
  StreamFile f;
  for (uint64_t i = 0; i < union_size; ++i) {
    const uint64_t e = members[i];
    if (i < inter) {
      f.records.push_back({RecordKind::kSetA, e, 0});
      f.records.push_back({RecordKind::kSetB, e, 0});
    } else if (i < inter + rest / 2) {
      f.records.push_back({RecordKind::kSetA, e, 0});
    } else {
      f.records.push_back({RecordKind::kSetB, e, 0});
    }
  }
  shuffle_records(f, rng);
  f.element_count = universe;
  return f;
}

void write_report_header(std::ostream& out) { out << kReportHeader << '\n'; }

namespace {

template <class T>
void put(std::ostream& out, const std::optional<T>& value) {
  out << ',';
  if (value.has_value()) out << *value;
}

}  // namespace

void write_report_row(std::ostream& out, const ReportRow& row) {
  out << row.algorithm;
  put(out, row.n);
  put(out, row.k);
  put(out, row.q);
  put(out, row.eps);
  put(out, row.alpha);
  put(out, row.variant);
  out << ',' << row.seed;
  put(out, row.trial);
  put(out, row.solution);
  put(out, row.estimate);
  put(out, row.oracle);
  out << ',';
  if (row.success.has_value()) out << (*row.success ? 1 : 0);
  put(out, row.wall_ms);
  out << '\n';
}

std::string format_cut_solution(const Cut& cut) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx",
                static_cast<unsigned long long>(cut.mask()));
  return buf;
}

std::string format_subset_solution(uint64_t mask) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(mask));
  return buf;
}

std::string format_assignment_solution(const std::vector<uint8_t>& assignment) {
  std::string s;
  s.reserve(assignment.size());
  for (uint8_t digit : assignment) s.push_back(static_cast<char>('0' + digit));
  return s;
}

namespace {

uint64_t fnv1a_step(uint64_t h, uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xff;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

uint64_t instance_hash(const BipartiteInstance& g) {
  uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a_step(h, g.left_size);
  h = fnv1a_step(h, g.right_size);
  for (const auto& [u, v] : g.edges)
    h = fnv1a_step(h, (static_cast<uint64_t>(u) << 32) | v);
  return h;
}

uint64_t instance_hash(const Graph& g) {
  uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a_step(h, g.n);
  for (uint64_t e : g.edges) h = fnv1a_step(h, e);
  return h;
}

}  // namespace densestream
