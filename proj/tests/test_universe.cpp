#include "doctest.h"

#include <algorithm>
#include <set>

#include "densestream/universe.hpp"

using namespace densestream;

TEST_CASE("edge encoding examples") {
  const EdgeUniverse u(4);
  CHECK(u.size() == 6);
  CHECK(u.encode(0, 1) == 0);
  CHECK(u.encode(2, 3) == 5);
  CHECK(u.encode(1, 0) == 0);  // symmetric
  CHECK_THROWS_AS(u.encode(2, 2), InputError);
  CHECK_THROWS_AS(u.encode(0, 4), InputError);
}

TEST_CASE("edge encoding is a bijection") {
  for (uint32_t n = 2; n <= 64; ++n) {
    const EdgeUniverse u(n);
    std::set<uint64_t> seen;
    for (uint32_t a = 0; a < n; ++a) {
      for (uint32_t b = a + 1; b < n; ++b) {
        const uint64_t idx = u.encode(a, b);
        CHECK(idx < u.size());
        CHECK(seen.insert(idx).second);
        const auto [da, db] = u.decode(idx);
        CHECK(da == a);
        CHECK(db == b);
      }
    }
    CHECK(seen.size() == u.size());
  }
}

TEST_CASE("crossing set sizes and contents") {
  const EdgeUniverse u(4);
  CHECK(crossing_set(Cut{4, 0b0000}, u).empty());

  const auto star = crossing_set(Cut{4, 0b0001}, u);
  CHECK(star.size() == 3);
  CHECK(star == std::vector<uint64_t>{u.encode(0, 1), u.encode(0, 2), u.encode(0, 3)});

  CHECK(crossing_set(Cut{4, 0b0011}, u).size() == 4);

  Rng rng(11);
  for (uint32_t n : {5u, 9u, 17u, 20u}) {
    const EdgeUniverse universe(n);
    for (int trial = 0; trial < 20; ++trial) {
      const Cut x{n, rng()};
      CHECK(crossing_set(x, universe).size() == crossing_count(x));
    }
  }
}

TEST_CASE("cut value on small graphs") {
  const std::vector<std::pair<uint32_t, uint32_t>> tri{{0, 1}, {1, 2}, {0, 2}};
  const Graph k3 = Graph::from_pairs(3, tri);
  CHECK(cut_value(k3, Cut{3, 0b100}) == doctest::Approx(2.0 / 3.0));
  CHECK(cut_value(k3, Cut{3, 0}) == 0.0);

  // Complete bipartite between {0,1} and {2,3}; cut {0,2} crosses half.
  const std::vector<std::pair<uint32_t, uint32_t>> bip{
      {0, 2}, {0, 3}, {1, 2}, {1, 3}};
  const Graph g = Graph::from_pairs(4, bip);
  CHECK(cut_value(g, Cut{4, 0b0101}) == doctest::Approx(0.5));

  CHECK_THROWS_AS(cut_value(Graph{3, {}}, Cut{3, 1}), UndefinedError);
}

TEST_CASE("cut value ignores duplicates and respects complementation") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const uint32_t n = 4 + static_cast<uint32_t>(uniform_below(rng, 8));
    const EdgeUniverse u(n);
    Graph g;
    g.n = n;
    for (int e = 0; e < 20; ++e) g.edges.push_back(uniform_below(rng, u.size()));
    Graph doubled = g;
    doubled.edges.insert(doubled.edges.end(), g.edges.begin(), g.edges.end());
    const Cut x{n, rng()};
    CHECK(cut_value(g, x) == cut_value(g, x.complement()));
    CHECK(cut_value(g, x) == cut_value(doubled, x));
  }
}

TEST_CASE("constraint encoding round-trips") {
  const CspShape shape{3, 2, 2};
  CHECK(shape.universe_size() == 96);  // 3*2 injections, 2^4 predicates

  // First constraint in the fixed order: tuple (0,1), all-zero predicate.
  const Constraint first = decode_constraint(0, shape);
  CHECK(first.vars == std::vector<uint32_t>{0, 1});
  CHECK(first.table == std::vector<uint8_t>{0, 0, 0, 0});
  CHECK(encode_constraint(first, shape) == 0);

  Rng rng(3);
  for (const CspShape s :
       {CspShape{3, 2, 2}, CspShape{5, 2, 3}, CspShape{4, 3, 2}}) {
    for (int trial = 0; trial < 100; ++trial) {
      const uint64_t id = uniform_below(rng, s.universe_size());
      const Constraint c = decode_constraint(id, s);
      CHECK(encode_constraint(c, s) == id);
    }
  }

  CHECK_THROWS_AS(encode_constraint(Constraint{{1, 1}, {0, 0, 0, 0}}, shape),
                  InputError);
}

TEST_CASE("csp value agrees with cut value under the max-cut embedding") {
  const std::vector<std::pair<uint32_t, uint32_t>> tri{{0, 1}, {1, 2}, {0, 2}};
  const Graph k3 = Graph::from_pairs(3, tri);
  const CspInstance phi = maxcut_as_csp(k3);
  const std::vector<uint8_t> x{0, 0, 1};
  CHECK(csp_value(phi, x) == doctest::Approx(2.0 / 3.0));

  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const uint32_t n = 3 + static_cast<uint32_t>(uniform_below(rng, 8));
    const EdgeUniverse u(n);
    Graph g;
    g.n = n;
    for (int e = 0; e < 12; ++e) g.edges.push_back(uniform_below(rng, u.size()));
    const CspInstance embedded = maxcut_as_csp(g);
    const uint64_t bits = rng();
    std::vector<uint8_t> assignment(n);
    for (uint32_t i = 0; i < n; ++i) assignment[i] = (bits >> i) & 1;
    CHECK(csp_value(embedded, assignment) ==
          doctest::Approx(cut_value(g, Cut{n, bits})));
  }
}

TEST_CASE("csp value edge cases") {
  CspShape shape{2, 2, 2};
  CspInstance all_ones;
  all_ones.shape = shape;
  all_ones.constraints.push_back(Constraint{{0, 1}, {1, 1, 1, 1}});
  all_ones.constraints.push_back(Constraint{{1, 0}, {1, 1, 1, 1}});
  for (uint8_t a : {0, 1}) {
    for (uint8_t b : {0, 1}) {
      const std::vector<uint8_t> x{a, b};
      CHECK(csp_value(all_ones, x) == 1.0);
    }
  }

  CspInstance single_and;
  single_and.shape = shape;
  single_and.constraints.push_back(Constraint{{0, 1}, {0, 0, 0, 1}});
  const std::vector<uint8_t> ones{1, 1};
  CHECK(csp_value(single_and, ones) == 1.0);

  const std::vector<uint8_t> bad{1, 2};
  CHECK_THROWS_AS(csp_value(single_and, bad), InputError);
  const std::vector<uint8_t> short_x{1};
  CHECK_THROWS_AS(csp_value(single_and, short_x), InputError);
}
