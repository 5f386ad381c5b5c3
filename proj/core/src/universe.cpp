#include "densestream/universe.hpp"

#include <algorithm>

namespace densestream {

namespace {

// Index of the first pair with minimum element a: sum_{i<a} (n-1-i).
uint64_t row_offset(uint32_t a, uint32_t n) {
  const uint64_t a64 = a, n64 = n;
  return a64 * (n64 - 1) - a64 * (a64 - 1) / 2;
}

}  // namespace

EdgeUniverse::EdgeUniverse(uint32_t n) : n_(n) {
  if (n < 2) throw ConfigError("edge universe needs at least 2 vertices");
  size_ = static_cast<uint64_t>(n) * (n - 1) / 2;
}

uint64_t EdgeUniverse::encode(uint32_t u, uint32_t v) const {
  if (u == v) throw InputError("self-loop edge rejected");
  if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
  const uint32_t a = std::min(u, v), b = std::max(u, v);
  return row_offset(a, n_) + (b - a - 1);
}

std::pair<uint32_t, uint32_t> EdgeUniverse::decode(uint64_t index) const {
  if (index >= size_) throw InputError("edge index out of universe");
  // Largest a with row_offset(a) <= index; row_offset(n-1) = size > index.
  uint32_t lo = 0, hi = n_ - 1;
  while (lo + 1 < hi) {
    const uint32_t mid = lo + (hi - lo) / 2;
    if (row_offset(mid, n_) <= index) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const uint32_t a = lo;
  const uint32_t b = a + 1 + static_cast<uint32_t>(index - row_offset(a, n_));
  return {a, b};
}

uint64_t crossing_count(const Cut& x) {
  const uint64_t s = x.ones();
  return s * (x.n - s);
}

std::vector<uint64_t> crossing_set(const Cut& x, const EdgeUniverse& universe) {
  std::vector<uint64_t> out;
  out.reserve(crossing_count(x));
  for_each_crossing(x, universe, [&](uint64_t e) { out.push_back(e); });
  return out;
}

Graph Graph::from_pairs(uint32_t n,
                        std::span<const std::pair<uint32_t, uint32_t>> pairs) {
  Graph g;
  g.n = n;
  const EdgeUniverse u(n);
  g.edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) g.edges.push_back(u.encode(a, b));
  return g;
}

std::vector<uint64_t> Graph::distinct_edges() const {
  std::vector<uint64_t> d(edges);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

double cut_value(const Graph& g, const Cut& x) {
  const auto distinct = g.distinct_edges();
  if (distinct.empty()) throw UndefinedError("cut value of an empty graph");
  const EdgeUniverse u(g.n);
  uint64_t crossing = 0;
  for (uint64_t e : distinct) {
    const auto [a, b] = u.decode(e);
    if (x.crosses(a, b)) ++crossing;
  }
  return static_cast<double>(crossing) / static_cast<double>(distinct.size());
}

uint64_t CspShape::point_count() const {
  uint64_t p = 1;
  for (uint32_t i = 0; i < k; ++i) p *= q;
  return p;
}

uint64_t CspShape::table_count() const {
  const uint64_t pts = point_count();
  if (pts >= 63) throw CapError("predicate table space exceeds 2^62");
  return 1ULL << pts;
}

uint64_t CspShape::tuple_count() const {
  if (k > n) throw ConfigError("constraint arity exceeds variable count");
  uint64_t t = 1;
  for (uint32_t i = 0; i < k; ++i) t *= (n - i);
  return t;
}

uint64_t CspShape::universe_size() const { return tuple_count() * table_count(); }

namespace {

void check_tuple(const Constraint& c, const CspShape& shape) {
  if (c.vars.size() != shape.k) throw InputError("constraint arity mismatch");
  for (size_t i = 0; i < c.vars.size(); ++i) {
    if (c.vars[i] >= shape.n) throw InputError("constraint variable out of range");
    for (size_t j = i + 1; j < c.vars.size(); ++j) {
      if (c.vars[i] == c.vars[j])
        throw InputError("constraint variable tuple not injective");
    }
  }
}

// Lehmer rank of an injective tuple under lexicographic order.
uint64_t tuple_rank(const std::vector<uint32_t>& vars, const CspShape& shape) {
  uint64_t rank = 0;
  uint64_t base = shape.tuple_count();
  for (uint32_t i = 0; i < shape.k; ++i) {
    base /= (shape.n - i);
    uint32_t smaller = 0;
    for (uint32_t j = 0; j < i; ++j) {
      if (vars[j] < vars[i]) ++smaller;
    }
    rank += static_cast<uint64_t>(vars[i] - smaller) * base;
  }
  return rank;
}

std::vector<uint32_t> tuple_unrank(uint64_t rank, const CspShape& shape) {
  std::vector<uint32_t> avail(shape.n);
  for (uint32_t i = 0; i < shape.n; ++i) avail[i] = i;
  std::vector<uint32_t> vars(shape.k);
  uint64_t base = shape.tuple_count();
  for (uint32_t i = 0; i < shape.k; ++i) {
    base /= (shape.n - i);
    const uint64_t idx = rank / base;
    rank %= base;
    vars[i] = avail[idx];
    avail.erase(avail.begin() + static_cast<ptrdiff_t>(idx));
  }
  return vars;
}

}  // namespace

uint64_t encode_constraint(const Constraint& c, const CspShape& shape) {
  check_tuple(c, shape);
  const uint64_t pts = shape.point_count();
  if (c.table.size() != pts) throw InputError("predicate table length mismatch");
  uint64_t table_bits = 0;
  for (uint64_t p = 0; p < pts; ++p) {
    if (c.table[p] > 1) throw InputError("predicate table entry not boolean");
    if (c.table[p]) table_bits |= 1ULL << p;
  }
  return tuple_rank(c.vars, shape) * shape.table_count() + table_bits;
}

Constraint decode_constraint(uint64_t index, const CspShape& shape) {
  if (index >= shape.universe_size())
    throw InputError("constraint index out of universe");
  const uint64_t tables = shape.table_count();
  Constraint c;
  c.vars = tuple_unrank(index / tables, shape);
  const uint64_t table_bits = index % tables;
  const uint64_t pts = shape.point_count();
  c.table.resize(pts);
  for (uint64_t p = 0; p < pts; ++p) c.table[p] = (table_bits >> p) & 1;
  return c;
}

bool constraint_satisfied(const Constraint& c, std::span<const uint8_t> x,
                          uint32_t q) {
  uint64_t point = 0;
  for (uint32_t v : c.vars) {
    if (x[v] >= q) throw InputError("assignment value out of alphabet");
    point = point * q + x[v];
  }
  return c.table[point] != 0;
}

double csp_value(const CspInstance& phi, std::span<const uint8_t> x) {
  if (x.size() != phi.shape.n) throw InputError("assignment length mismatch");
  if (phi.constraints.empty()) throw UndefinedError("value of an empty instance");
  std::vector<uint64_t> ids;
  ids.reserve(phi.constraints.size());
  for (const auto& c : phi.constraints)
    ids.push_back(encode_constraint(c, phi.shape));
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  uint64_t satisfied = 0;
  for (uint64_t id : ids) {
    if (constraint_satisfied(decode_constraint(id, phi.shape), x, phi.shape.q))
      ++satisfied;
  }
  return static_cast<double>(satisfied) / static_cast<double>(ids.size());
}

Constraint maxcut_constraint(uint32_t u, uint32_t v) {
  return Constraint{{u, v}, {0, 1, 1, 0}};
}

CspInstance maxcut_as_csp(const Graph& g) {
  CspInstance phi;
  phi.shape = CspShape{g.n, 2, 2};
  const EdgeUniverse universe(g.n);
  phi.constraints.reserve(g.edges.size());
  for (uint64_t e : g.edges) {
    const auto [u, v] = universe.decode(e);
    phi.constraints.push_back(maxcut_constraint(u, v));
  }
  return phi;
}

}  // namespace densestream
