#include <doctest.h>

#include <random>
#include <sstream>

#include "oddcycle/cycles.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/graph6.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

Graph two_disjoint_edges() { return Graph(4, {{0, 1}, {2, 3}}); }

}  // namespace

TEST_CASE("build_graph") {
  CHECK(Graph(0, {}).order() == 0);

  const Graph p3(3, {{0, 1}, {1, 2}});
  CHECK(p3.degrees() == std::vector<std::size_t>{1, 2, 1});

  const Graph c7 = cycle_graph(7);
  CHECK(c7.size() == 7);
  for (auto d : c7.degrees()) CHECK(d == 2);

  SUBCASE("duplicates collapse, symmetric") {
    const Graph g(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.size() == 1);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 1));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), GraphError);
  }
}

TEST_CASE("adjacency is symmetric and irreflexive on random graphs") {
  std::mt19937_64 rng(7);
  for (int it = 0; it < 50; ++it) {
    const Graph g = oracle::random_graph(1 + rng() % 40, 0.3, rng);
    for (Vertex u = 0; u < g.order(); ++u) {
      CHECK_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < g.order(); ++v) CHECK(g.adjacent(u, v) == g.adjacent(v, u));
    }
  }
}

TEST_CASE("graph6 golden vectors") {
  const Graph k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);

  const Graph two = parse_graph6("A?");
  CHECK(two.order() == 2);
  CHECK(two.size() == 0);

  const Graph p3 = parse_graph6("Bg");
  CHECK(p3 == path_graph(3));

  CHECK(write_graph6(complete_graph(4)) == "C~");
  CHECK(write_graph6(empty_graph(1)) == "@");
  CHECK(write_graph6(path_graph(3)) == "Bg");
  // C5 bits x01..x34 = 1,0,1,0,0,1,1,0,0,1 -> 101001 100100 -> 'h' 'c'
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
  CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));
}

TEST_CASE("graph6 medium size field") {
  const Graph g = cycle_graph(63);
  const std::string s = write_graph6(g);
  CHECK(static_cast<unsigned char>(s[0]) == 126);
  CHECK(s[1] == 63);
  CHECK(s[2] == 63 + 0);
  CHECK(s[3] == 63 + 63);
  CHECK(parse_graph6(s) == g);
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("C"), FormatError);          // truncated body
  CHECK_THROWS_AS(parse_graph6("C~~"), FormatError);        // trailing byte
  CHECK_THROWS_AS(parse_graph6("C\x20"), FormatError);      // byte below 63
  CHECK_THROWS_AS(parse_graph6("~~??????"), FormatError);   // 2^36 size encoding
  CHECK_THROWS_AS(parse_graph6("~?"), FormatError);         // truncated size field
}

TEST_CASE("graph6 round trip: all 64 labelled 4-vertex graphs") {
  for (std::uint64_t mask = 0; mask < 64; ++mask) {
    const Graph g = oracle::graph_from_mask(4, mask);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("graph6 round trip: random graphs up to 32 vertices") {
  std::mt19937_64 rng(2024);
  for (int it = 0; it < 300; ++it) {
    const Graph g = oracle::random_graph(rng() % 33, 0.4, rng);
    CHECK(parse_graph6(write_graph6(g)) == g);
  }
}

TEST_CASE("edge list format") {
  std::istringstream in("3 2\n0 1\n1 2\n");
  const Graph g = parse_edge_list(in);
  CHECK(g == path_graph(3));
  std::istringstream back(write_edge_list(g));
  CHECK(parse_edge_list(back) == g);

  std::istringstream bad("3 2\n0 1\n");
  CHECK_THROWS_AS(parse_edge_list(bad), FormatError);
  std::istringstream range("3 1\n0 5\n");
  CHECK_THROWS_AS(parse_edge_list(range), GraphError);
}

TEST_CASE("distances_from") {
  const auto d = distances_from(cycle_graph(7), 0);
  const std::vector<std::size_t> want{0, 1, 2, 3, 3, 2, 1};
  for (std::size_t i = 0; i < 7; ++i) CHECK(d[i] == want[i]);

  const auto dd = distances_from(two_disjoint_edges(), 0);
  CHECK(dd[1] == std::size_t{1});
  CHECK_FALSE(dd[2].has_value());
  CHECK_FALSE(dd[3].has_value());

  const Graph b = blowup({cycle_graph(7), std::vector<std::size_t>(7, 2)});
  const auto db = distances_from(b, 0);
  CHECK(db[1] == std::size_t{2});
  const auto fw = oracle::distance_matrix(b);
  for (Vertex v = 0; v < b.order(); ++v) CHECK(*db[v] == fw[0][v]);

  CHECK_THROWS_AS(distances_from(b, 14), GraphError);
}

TEST_CASE("distances agree with matrix-power reachability for n <= 8") {
  std::mt19937_64 rng(99);
  for (int it = 0; it < 150; ++it) {
    const Graph g = oracle::random_graph(1 + rng() % 8, 0.3, rng);
    const auto ref = oracle::distance_by_matrix_powers(g);
    for (Vertex s = 0; s < g.order(); ++s) {
      const auto d = distances_from(g, s);
      for (Vertex v = 0; v < g.order(); ++v) {
        if (ref[s][v] == oracle::kInf)
          CHECK_FALSE(d[v].has_value());
        else
          CHECK(d[v] == ref[s][v]);
      }
    }
  }
}

TEST_CASE("odd_girth") {
  CHECK(odd_girth(cycle_graph(5)).length == std::size_t{5});
  CHECK(odd_girth(complete_bipartite(3, 3)).bipartite());
  CHECK(odd_girth(complete_bipartite(3, 3)).str() == "inf");
  CHECK(odd_girth(petersen_graph()).length == std::size_t{5});
  CHECK(odd_girth(empty_graph(0)).bipartite());
  CHECK(odd_girth(complete_graph(4)).length == std::size_t{3});
}

TEST_CASE("odd_girth agrees with the smallest odd length of the brute-force cycle counter") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 120; ++it) {
    const Graph g = oracle::random_graph(3 + rng() % 8, 0.25, rng);
    std::optional<std::size_t> want;
    for (std::size_t l = 3; l <= g.order() && !want; l += 2)
      if (brute_force_cycle_count(g, l, false) > 0) want = l;
    CHECK(odd_girth(g).length == want);
  }
}

TEST_CASE("odd girth of balanced cycle blow-ups equals the cycle length") {
  for (std::size_t m : {3, 5, 7, 9})
    for (std::size_t t : {1, 2, 3}) {
      const Graph g = blowup({cycle_graph(m), std::vector<std::size_t>(m, t)});
      CHECK(odd_girth(g).length == m);
    }
}

TEST_CASE("blowup") {
  CHECK(blowup({cycle_graph(7), std::vector<std::size_t>(7, 1)}) == cycle_graph(7));

  const Graph b2 = blowup({cycle_graph(7), std::vector<std::size_t>(7, 2)});
  CHECK(b2.order() == 14);
  for (auto d : b2.degrees()) CHECK(d == 4);
  CHECK(odd_girth(b2).length == std::size_t{7});

  const Graph p = blowup({cycle_graph(5), {2, 2, 2, 1, 1}});
  CHECK(p.order() == 8);
  CHECK(brute_force_cycle_count(p, 3, false) == 0);

  CHECK_THROWS_AS(blowup({cycle_graph(5), {1, 1}}), GraphError);

  SUBCASE("vertex and edge counts") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 30; ++it) {
      const Graph pattern = oracle::random_graph(2 + rng() % 6, 0.5, rng);
      std::vector<std::size_t> blobs(pattern.order());
      for (auto& b : blobs) b = rng() % 4;
      const Graph g = blowup({pattern, blobs});
      std::size_t n = 0, m = 0;
      for (auto b : blobs) n += b;
      for (const auto& [u, v] : pattern.edges()) m += blobs[u] * blobs[v];
      CHECK(g.order() == n);
      CHECK(g.size() == m);
    }
  }
}

TEST_CASE("balanced_blobs") {
  CHECK(balanced_blobs(14, 7) == std::vector<std::size_t>(7, 2));
  CHECK(balanced_blobs(8, 5) == std::vector<std::size_t>{2, 2, 2, 1, 1});
  CHECK(balanced_blobs(7, 7) == std::vector<std::size_t>(7, 1));
  CHECK_THROWS_AS(balanced_blobs(3, 0), GraphError);
}

TEST_CASE("recognize_cycle_blowup") {
  const Graph g = blowup({cycle_graph(7), {3, 1, 2, 2, 1, 1, 1}});
  const auto perm_seed = std::vector<Vertex>{10, 2, 0, 5, 7, 1, 3, 4, 6, 8, 9};
  const auto blobs = recognize_cycle_blowup(g.permuted(perm_seed), 7);
  REQUIRE(blobs.has_value());
  std::vector<std::size_t> sorted = *blobs;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::size_t>{1, 1, 1, 1, 2, 2, 3});

  CHECK_FALSE(recognize_cycle_blowup(cycle_graph(7).with_vertex({}), 7).has_value());
  CHECK_FALSE(recognize_cycle_blowup(petersen_graph(), 5).has_value());
  CHECK(recognize_cycle_blowup(balanced_cycle_blowup(7, 21), 7) == std::vector<std::size_t>(7, 3));
}
