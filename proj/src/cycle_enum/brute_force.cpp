// Reference counter kept deliberately naive and free of the DFS machinery in
// cycles.cpp: it only touches Graph::adjacent.

#include <cstdint>
#include <vector>

#include "oddcycle/cycles.hpp"

namespace oddcycle {
namespace {

// Directed Hamiltonian cycles of the k-vertex graph `adj` that start at 0.
std::uint64_t hamiltonian_closures(const std::vector<std::vector<bool>>& adj, std::size_t at, std::uint32_t used,
                                   std::size_t placed) {
  const std::size_t k = adj.size();
  if (placed == k) return adj[at][0] ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t next = 1; next < k; ++next) {
    if ((used >> next) & 1U) continue;
    if (!adj[at][next]) continue;
    total += hamiltonian_closures(adj, next, used | (1U << next), placed + 1);
  }
  return total;
}

}  // namespace

BigInt brute_force_cycle_count(const Graph& g, std::size_t k, bool induced_only) {
  const std::size_t n = g.order();
  if (k < 3 || k > n || k > 31) return 0;
  BigInt total = 0;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
    std::size_t edges = 0;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b)
        if (g.adjacent(pick[a], pick[b])) {
          adj[a][b] = adj[b][a] = true;
          ++edges;
        }
    if (edges >= k && (!induced_only || edges == k)) {
      // Each undirected cycle is traversed twice from vertex 0.
      total += hamiltonian_closures(adj, 0, 1U, 1) / 2;
    }
    // next k-subset in lexicographic order
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return total;
}

}  // namespace oddcycle
