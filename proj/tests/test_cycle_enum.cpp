#include <doctest.h>

#include <random>
#include <set>

#include "oddcycle/cycles.hpp"
#include "oddcycle/graph.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

Graph hexagon_with_diagonals(std::size_t count) {
  Graph g = cycle_graph(6);
  if (count >= 1) g = g.with_toggled(0, 3);
  if (count >= 2) g = g.with_toggled(1, 4);
  if (count >= 3) g = g.with_toggled(2, 5);
  return g;
}

// Brute force over 6-subsets and their vertex orders.
bool brute_c6_with_diagonals(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 6) return false;
  std::vector<Vertex> pick(6);
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + 6, true);
  do {
    std::vector<Vertex> s;
    for (std::size_t v = 0; v < n; ++v)
      if (mask[v]) s.push_back(v);
    std::sort(s.begin(), s.end());
    do {
      bool hexagon = true;
      for (std::size_t i = 0; i < 6; ++i) hexagon = hexagon && g.adjacent(s[i], s[(i + 1) % 6]);
      if (!hexagon) continue;
      std::size_t diag = 0, other = 0;
      for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = i + 2; j < 6; ++j) {
          if (i == 0 && j == 5) continue;
          if (!g.adjacent(s[i], s[j])) continue;
          (j - i == 3 ? diag : other)++;
        }
      if (other == 0 && (diag == 1 || diag == 2)) return true;
    } while (std::next_permutation(s.begin(), s.end()));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return false;
}

}  // namespace

TEST_CASE("enumerate_cycles examples") {
  const auto c7 = list_cycles(cycle_graph(7), 7);
  REQUIRE(c7.size() == 1);
  CHECK(c7[0].vertices == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6});

  CHECK(list_cycles(complete_graph(4), 3).size() == 4);
  CHECK(list_cycles(complete_graph(4), 4, true).empty());
  CHECK(list_cycles(complete_graph(4), 4, false).size() == 3);
  CHECK_THROWS_AS(list_cycles(cycle_graph(5), 2), std::invalid_argument);
}

TEST_CASE("emitted cycles are canonical, valid, unique and lexicographically ordered") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 60; ++it) {
    const Graph g = oracle::random_graph(4 + rng() % 7, 0.45, rng);
    for (std::size_t k = 3; k <= g.order(); ++k)
      for (bool induced : {false, true}) {
        const auto cycles = list_cycles(g, k, induced);
        std::set<std::vector<Vertex>> seen;
        for (std::size_t i = 0; i < cycles.size(); ++i) {
          const auto& v = cycles[i].vertices;
          REQUIRE(v.size() == k);
          CHECK(canonical_cycle(v) == cycles[i]);
          CHECK(v[0] == *std::min_element(v.begin(), v.end()));
          CHECK(v[1] < v.back());
          for (std::size_t j = 0; j < k; ++j) CHECK(g.adjacent(v[j], v[(j + 1) % k]));
          if (induced) CHECK(oracle::induced_cycle(g, v));
          CHECK(seen.insert(v).second);
          if (i > 0) CHECK(cycles[i - 1].vertices < v);
        }
      }
  }
}

TEST_CASE("count_cycles examples") {
  const Graph b = blowup({cycle_graph(7), std::vector<std::size_t>(7, 2)});
  CHECK(count_cycles(b, 7) == 128);
  CHECK(count_cycles(petersen_graph(), 5) == 12);
  CHECK(count_cycles(complete_bipartite(4, 4), 5) == 0);
  CHECK(count_cycles(complete_bipartite(4, 4), 7) == 0);
  CHECK_THROWS_AS(count_cycles(b, 2), std::invalid_argument);
}

TEST_CASE("count_induced_cycles examples") {
  CHECK(count_induced_cycles(cycle_graph(7), 7) == 1);
  CHECK(count_induced_cycles(complete_graph(4), 4) == 0);
  const Graph b8 = blowup({cycle_graph(8), std::vector<std::size_t>(8, 2)});
  CHECK(count_induced_cycles(b8, 8) == 256);
}

TEST_CASE("brute_force_cycle_count examples") {
  CHECK(brute_force_cycle_count(cycle_graph(7), 7, false) == 1);
  CHECK(brute_force_cycle_count(cycle_graph(7), 7, true) == 1);
  CHECK(brute_force_cycle_count(complete_graph(5), 5, false) == 12);
  CHECK(brute_force_cycle_count(empty_graph(6), 4, false) == 0);
  CHECK(brute_force_cycle_count(complete_graph(4), 4, true) == 0);
}

TEST_CASE("optimized counts agree with the oracle on random graphs") {
  std::mt19937_64 rng(1234);
  for (int it = 0; it < 60; ++it) {
    const Graph g = oracle::random_graph(3 + rng() % 8, 0.2 + 0.6 * (rng() % 10) / 10.0, rng);
    for (std::size_t k = 3; k <= g.order(); ++k) {
      CHECK(count_cycles(g, k) == brute_force_cycle_count(g, k, false));
      CHECK(count_induced_cycles(g, k) == brute_force_cycle_count(g, k, true));
      CHECK(list_cycles(g, k).size() == count_cycles(g, k));
    }
  }
}

TEST_CASE("blow-up product law") {
  std::mt19937_64 rng(77);
  for (std::size_t k : {5, 7, 9, 11}) {
    for (int it = 0; it < 8; ++it) {
      std::vector<std::size_t> blobs(k, 1);
      std::size_t total = k;
      while (total < 12 && rng() % 3 != 0) {
        ++blobs[rng() % k];
        ++total;
      }
      BigInt product = 1;
      for (auto b : blobs) product *= b;
      CHECK(count_cycles(blowup({cycle_graph(k), blobs}), k) == product);
    }
  }
}

TEST_CASE("high odd girth makes every k-cycle induced") {
  std::mt19937_64 rng(55);
  const Graph base = blowup({cycle_graph(7), std::vector<std::size_t>(7, 2)});
  for (int it = 0; it < 40; ++it) {
    Graph g = base;
    for (const auto& [u, v] : base.edges())
      if (rng() % 4 == 0) g = g.with_toggled(u, v);
    REQUIRE(odd_girth(g).at_least(7));
    CHECK(count_induced_cycles(g, 7) == count_cycles(g, 7));
  }
}

TEST_CASE("worker count does not change counts") {
  const Graph g = balanced_cycle_blowup(7, 28);
  const BigInt one = count_cycles(g, 7, 1);
  CHECK(one == 16384);
  CHECK(count_cycles(g, 7, 3) == one);
  CHECK(count_induced_cycles(g, 7, 4) == one);
}

TEST_CASE("cycles through a vertex") {
  const Graph g = petersen_graph();
  std::size_t through0 = 0;
  enumerate_cycles_through(g, 5, false, 0, [&](const CycleInstance& c) {
    CHECK(std::find(c.vertices.begin(), c.vertices.end(), 0) != c.vertices.end());
    ++through0;
    return true;
  });
  // 12 pentagons, 5 vertices each, spread evenly over 10 vertices.
  CHECK(through0 == 6);
  CHECK(has_cycle_through(cycle_graph(7).with_vertex({}), 7, true, 3));
  CHECK_FALSE(has_cycle_through(cycle_graph(7).with_vertex({}), 7, true, 7));
}

TEST_CASE("induced hexagon with main diagonals") {
  CHECK(find_induced_c6_with_diagonals(hexagon_with_diagonals(1)).has_value());
  CHECK(find_induced_c6_with_diagonals(hexagon_with_diagonals(2)).has_value());
  CHECK_FALSE(find_induced_c6_with_diagonals(cycle_graph(6)).has_value());
  CHECK_FALSE(find_induced_c6_with_diagonals(complete_bipartite(3, 3)).has_value());
  CHECK(find_induced_c6_with_diagonals(hexagon_with_diagonals(3)) == std::nullopt);

  std::mt19937_64 rng(8);
  for (int it = 0; it < 80; ++it) {
    const Graph g = oracle::random_graph(6 + rng() % 3, 0.45, rng);
    CHECK(find_induced_c6_with_diagonals(g).has_value() == brute_c6_with_diagonals(g));
  }
}

TEST_CASE("observation_class_check") {
  // Two adjacent doubled blobs already hold an induced hexagon with two
  // antipodal chords, e.g. 0-2-1-14-12-15 with chords 0-14 and 1-15.
  const Graph b8 = blowup({cycle_graph(8), std::vector<std::size_t>(8, 2)});
  REQUIRE(brute_c6_with_diagonals(b8.induced({0, 1, 2, 12, 14, 15})));
  const auto b8v = observation_class_violation(b8, 8);
  REQUIRE(b8v.has_value());
  CHECK(b8v->kind == "C6 with main diagonals");
  CHECK(observation_class_check(cycle_graph(8), 8));
  CHECK(observation_class_check(complete_bipartite(3, 3), 8));

  const auto v7 = observation_class_violation(cycle_graph(7), 8);
  REQUIRE(v7.has_value());
  CHECK(v7->kind == "induced C7");
  CHECK(v7->witness.size() == 7);

  const auto k4 = observation_class_violation(complete_graph(4), 8);
  REQUIRE(k4.has_value());
  CHECK(k4->kind == "induced C3");

  const auto hex = observation_class_violation(hexagon_with_diagonals(1), 8);
  REQUIRE(hex.has_value());
  CHECK(hex->kind == "C6 with main diagonals");

  CHECK_THROWS_AS(observation_class_check(b8, 7), std::invalid_argument);
  CHECK_THROWS_AS(observation_class_check(b8, 6), std::invalid_argument);
}
