#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "oddcycle/vertex_set.hpp"

namespace oddcycle {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1, stored as bit rows.
///
/// Immutable once built; copies are cheap enough for the small graphs this
/// project targets (64 bytes per vertex).
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on out-of-range endpoints or loops. Duplicate edges
  /// (in either orientation) collapse to one.
  Graph(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const { return rows_.size(); }
  std::size_t size() const;

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const VertexSet& neighbors(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }
  std::vector<std::size_t> degrees() const;

  /// All vertices as a set.
  VertexSet vertices() const { return VertexSet::prefix(order()); }

  std::vector<Edge> edges() const;

  /// Graph on `keep` (in the given order) with the induced edges.
  Graph induced(const std::vector<Vertex>& keep) const;

  /// Relabels vertex v as perm[v].
  Graph permuted(const std::vector<Vertex>& perm) const;

  /// Same graph with edge {u,v} flipped.
  Graph with_toggled(Vertex u, Vertex v) const;

  /// Same graph plus one vertex adjacent to `nbrs`.
  Graph with_vertex(const VertexSet& nbrs) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<VertexSet> rows_;
};

/// Convenience constructors used across tests, examples and the CLI.
Graph cycle_graph(std::size_t m);
Graph path_graph(std::size_t m);
Graph complete_graph(std::size_t m);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t m);
Graph petersen_graph();

/// A distance of nullopt means "unreachable".
using Distance = std::optional<std::size_t>;

std::vector<Distance> distances_from(const Graph& g, Vertex v);

/// Shortest odd cycle length; nullopt for bipartite graphs.
struct OddGirth {
  std::optional<std::size_t> length;

  bool bipartite() const { return !length.has_value(); }
  /// True when there is no odd cycle shorter than k.
  bool at_least(std::size_t k) const { return !length || *length >= k; }
  std::string str() const { return length ? std::to_string(*length) : "inf"; }
  friend bool operator==(const OddGirth&, const OddGirth&) = default;
};

OddGirth odd_girth(const Graph& g);

/// Length of the shortest odd closed walk through v, if any.
std::optional<std::size_t> shortest_odd_closed_walk(const Graph& g, Vertex v);

/// Vertices at distance exactly 2 from v.
VertexSet second_neighborhood(const Graph& g, Vertex v);

struct BlowupSpec {
  Graph pattern;
  std::vector<std::size_t> blobs;
};

/// Replaces pattern vertex i by an independent set of blobs[i] vertices
/// (blob-major order) and each pattern edge by a complete bipartite graph.
Graph blowup(const BlowupSpec& spec);

/// m sizes of floor(n/m) or ceil(n/m), larger first, summing to n.
std::vector<std::size_t> balanced_blobs(std::size_t n, std::size_t m);

/// Balanced blow-up of the m-cycle on n vertices.
Graph balanced_cycle_blowup(std::size_t m, std::size_t n);

/// Blob sizes if g is (up to relabeling) a blow-up of C_m with nonempty blobs
/// listed in cyclic order, otherwise nullopt.
std::optional<std::vector<std::size_t>> recognize_cycle_blowup(const Graph& g, std::size_t m);

}  // namespace oddcycle
