#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/numeric.hpp"

namespace oddcycle {

/// One k-cycle in traversal order, canonically rotated: the smallest vertex
/// comes first and the smaller of its two cycle-neighbours second.
struct CycleInstance {
  std::vector<Vertex> vertices;

  std::size_t length() const { return vertices.size(); }
  Vertex at(std::ptrdiff_t i) const {
    const auto k = static_cast<std::ptrdiff_t>(vertices.size());
    return vertices[static_cast<std::size_t>(((i % k) + k) % k)];
  }
  VertexSet vertex_set() const;
  friend bool operator==(const CycleInstance&, const CycleInstance&) = default;
};

/// Rotates/reflects a cyclic vertex order into canonical position.
CycleInstance canonical_cycle(std::vector<Vertex> order);

/// Returns false from the visitor to stop early.
using CycleVisitor = std::function<bool(const CycleInstance&)>;

/// Emits every k-cycle subgraph once, lexicographically by canonical order.
/// With induced_only, chordless cycles only. Throws std::invalid_argument
/// for k < 3.
void enumerate_cycles(const Graph& g, std::size_t k, bool induced_only, const CycleVisitor& visit);

std::vector<CycleInstance> list_cycles(const Graph& g, std::size_t k, bool induced_only = false);

/// Roots are split across `workers` threads; the total does not depend on it.
BigInt count_cycles(const Graph& g, std::size_t k, std::size_t workers = 1);
BigInt count_induced_cycles(const Graph& g, std::size_t k, std::size_t workers = 1);

/// Emits each (induced) k-cycle containing v exactly once.
void enumerate_cycles_through(const Graph& g, std::size_t k, bool induced_only, Vertex v,
                              const CycleVisitor& visit);

bool has_cycle_through(const Graph& g, std::size_t k, bool induced_only, Vertex v);

/// Independent oracle: tries every k-subset and counts Hamiltonian cycles of
/// the induced subgraph. Only meant for n up to ~14.
BigInt brute_force_cycle_count(const Graph& g, std::size_t k, bool induced_only);

/// Six vertices inducing a hexagon plus one or two antipodal chords,
/// listed in hexagon order.
std::optional<std::vector<Vertex>> find_induced_c6_with_diagonals(const Graph& g);

/// As above but only among 6-sets containing v.
std::optional<std::vector<Vertex>> find_induced_c6_with_diagonals_through(const Graph& g, Vertex v);

struct ClassViolation {
  std::string kind;  // "induced C3", "induced C7", "C6 with 1 diagonal", ...
  std::vector<Vertex> witness;
};

/// Membership in the even-k class: no induced C3, no induced C_l for
/// 5 <= l <= k-1, no induced hexagon with one or two main diagonals.
/// Throws std::invalid_argument unless k is even and at least 8.
std::optional<ClassViolation> observation_class_violation(const Graph& g, std::size_t k);

/// Same test restricted to patterns that contain v; for a graph whose
/// vertex-deleted subgraph g - v is already in the class this decides
/// membership of g.
std::optional<ClassViolation> observation_class_violation_through(const Graph& g, std::size_t k, Vertex v);

inline bool observation_class_check(const Graph& g, std::size_t k) {
  return !observation_class_violation(g, k).has_value();
}

}  // namespace oddcycle
