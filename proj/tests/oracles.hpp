#pragma once

// Test-only reference implementations. Nothing here shares code with the
// library beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <vector>

#include "oddcycle/graph.hpp"

namespace oracle {

using oddcycle::Edge;
using oddcycle::Graph;
using oddcycle::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// Graph whose upper-triangle bits (column-major, as in graph6) are `mask`.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> e;
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++bit)
      if ((mask >> bit) & 1U) e.emplace_back(i, j);
  return Graph(n, e);
}

/// Smallest adjacency code over all vertex permutations.
inline std::uint64_t permutation_canon(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  do {
    std::uint64_t code = 0;
    std::size_t bit = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i, ++bit)
        if (g.adjacent(perm[i], perm[j])) code |= std::uint64_t{1} << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic_brute(const Graph& a, const Graph& b) {
  return a.order() == b.order() && permutation_canon(a) == permutation_canon(b);
}

inline constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::size_t>> distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][m] + d[m][v]);
  return d;
}

/// Reachability within r steps via boolean matrix powers.
inline std::vector<std::vector<std::size_t>> distance_by_matrix_powers(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, kInf));
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    reach[u][u] = true;
    d[u][u] = 0;
  }
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<std::vector<bool>> next = reach;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t m = 0; m < n; ++m)
        if (reach[u][m])
          for (std::size_t v = 0; v < n; ++v)
            if (g.adjacent(m, v)) next[u][v] = true;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (next[u][v] && d[u][v] == kInf) d[u][v] = r;
    reach = std::move(next);
  }
  return d;
}

inline bool induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (a == b) continue;
      if (p[a] == p[b]) return false;
      const bool consecutive = (a + 1 == b) || (b + 1 == a);
      if (g.adjacent(p[a], p[b]) != consecutive) return false;
    }
  return true;
}

inline bool induced_cycle(const Graph& g, const std::vector<Vertex>& c) {
  const std::size_t k = c.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      if (c[a] == c[b]) return false;
      const bool consecutive = (a + 1) % k == b || (b + 1) % k == a;
      if (g.adjacent(c[a], c[b]) != consecutive) return false;
    }
  return true;
}

/// A-set sizes straight from the definitions, one vertex at a time.
inline std::vector<std::vector<bool>> naive_a_sets(const Graph& g, const std::vector<Vertex>& z, std::size_t k) {
  const std::size_t n = g.order();
  const auto dist = distance_matrix(g);
  std::vector<std::vector<bool>> a(k, std::vector<bool>(n, false));
  for (Vertex w = 0; w < n; ++w) {
    a[0][w] = true;
    a[1][w] = g.adjacent(z[0], w);
    a[2][w] = !g.adjacent(z[0], w) && dist[z[1]][w] == 2;
    a[3][w] = g.adjacent(z[1], w) && g.adjacent(z[2], w);
    for (std::size_t i = 4; i < k; ++i) {
      std::vector<Vertex> p{z[0], z[1], z[3], z[2]};
      for (std::size_t t = 4; t < i; ++t) p.push_back(z[t]);
      p.push_back(w);
      a[i][w] = i + 1 < k ? induced_path(g, p) : induced_cycle(g, p);
    }
  }
  return a;
}

}  // namespace oracle
