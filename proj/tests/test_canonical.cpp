#include <doctest.h>

#include <numeric>
#include <random>
#include <set>

#include "oddcycle/canonical.hpp"
#include "oddcycle/graph.hpp"
#include "oracles.hpp"

using namespace oddcycle;

namespace {

std::vector<Vertex> shuffled(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace

TEST_CASE("canonical_form examples") {
  std::mt19937_64 rng(3);
  const Graph c5 = cycle_graph(5);
  CHECK(canonical_form(c5).certificate == canonical_form(c5.permuted(shuffled(5, rng))).certificate);
  CHECK(canonical_form(c5).certificate != canonical_form(path_graph(5)).certificate);
  CHECK(canonical_form(empty_graph(0)).certificate == canonical_form(Graph()).certificate);
}

TEST_CASE("canonical labeling relabels onto the certificate graph") {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 40; ++it) {
    const Graph g = oracle::random_graph(1 + rng() % 12, 0.35, rng);
    const auto form = canonical_form(g);
    CHECK(canonical_graph(g) == g.permuted(form.labeling));
    CHECK(canonical_graph(canonical_graph(g)) == canonical_graph(g));
  }
}

TEST_CASE("canonical certificates match brute-force isomorphism for n <= 7") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 400; ++it) {
    const std::size_t n = 1 + rng() % 7;
    const double p = 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0;
    const Graph a = oracle::random_graph(n, p, rng);
    // Half the time compare against a relabeled copy, otherwise a fresh graph.
    const Graph b = (it % 2 == 0) ? a.permuted(shuffled(n, rng)) : oracle::random_graph(n, p, rng);
    const bool same_cert = canonical_form(a).certificate == canonical_form(b).certificate;
    CHECK(same_cert == oracle::isomorphic_brute(a, b));
  }
}

TEST_CASE("canonical certificates separate all 156 graphs on 6 vertices") {
  std::set<std::uint64_t> brute;
  std::set<std::string> certs;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const Graph g = oracle::graph_from_mask(6, mask);
    brute.insert(oracle::permutation_canon(g));
    certs.insert(canonical_form(g).certificate);
  }
  CHECK(brute.size() == 156);
  CHECK(certs.size() == 156);
}

TEST_CASE("symmetric graphs canonize quickly and consistently") {
  std::mt19937_64 rng(21);
  const std::vector<Graph> graphs{empty_graph(16), complete_graph(16), petersen_graph(), cycle_graph(16),
                                  complete_bipartite(8, 8), Graph(16, {{0, 1}, {2, 3}, {4, 5}, {6, 7}, {8, 9},
                                                                       {10, 11}, {12, 13}, {14, 15}}),
                                  balanced_cycle_blowup(7, 21)};
  for (const auto& g : graphs) {
    const auto cert = canonical_form(g).certificate;
    CHECK(canonical_form(g.permuted(shuffled(g.order(), rng))).certificate == cert);
  }
}
