#include "oddcycle/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace oddcycle {

Graph::Graph(std::size_t n, const std::vector<Edge>& edges) : rows_(n) {
  if (n > kMaxVertices)
    throw GraphError("graph has " + std::to_string(n) + " vertices; limit is " + std::to_string(kMaxVertices));
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
    rows_[u].set(v);
    rows_[v].set(u);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v >= order())
    throw GraphError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& r : rows_) twice += r.count();
  return twice / 2;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(order());
  for (Vertex v = 0; v < order(); ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    rows_[u].for_each([&](Vertex v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (adjacent(keep[i], keep[j])) e.emplace_back(i, j);
  }
  return Graph(keep.size(), e);
}

Graph Graph::permuted(const std::vector<Vertex>& perm) const {
  if (perm.size() != order()) throw GraphError("permutation length mismatch");
  std::vector<Edge> e;
  for (const auto& [u, v] : edges()) e.emplace_back(perm[u], perm[v]);
  return Graph(order(), e);
}

Graph Graph::with_toggled(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
  Graph g = *this;
  if (g.rows_[u].test(v)) {
    g.rows_[u].reset(v);
    g.rows_[v].reset(u);
  } else {
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  }
  return g;
}

Graph Graph::with_vertex(const VertexSet& nbrs) const {
  if (order() + 1 > kMaxVertices) throw GraphError("vertex limit reached");
  Graph g = *this;
  Vertex v = order();
  g.rows_.emplace_back();
  nbrs.for_each([&](Vertex u) {
    check_vertex(u);
    g.rows_[u].set(v);
    g.rows_[v].set(u);
  });
  return g;
}

Graph cycle_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i) e.emplace_back(i, (i + 1) % m);
  return Graph(m, e);
}

Graph path_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < m; ++i) e.emplace_back(i, i + 1);
  return Graph(m, e);
}

Graph complete_graph(std::size_t m) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) e.emplace_back(i, j);
  return Graph(m, e);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph(a + b, e);
}

Graph empty_graph(std::size_t m) { return Graph(m, {}); }

Graph petersen_graph() {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, e);
}

std::vector<Distance> distances_from(const Graph& g, Vertex v) {
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  std::vector<Distance> dist(g.order());
  dist[v] = 0;
  VertexSet seen;
  seen.set(v);
  VertexSet frontier = seen;
  std::size_t d = 0;
  while (!frontier.empty()) {
    ++d;
    VertexSet next;
    frontier.for_each([&](Vertex u) { next |= g.neighbors(u); });
    next -= seen;
    next.for_each([&](Vertex u) { dist[u] = d; });
    seen |= next;
    frontier = next;
  }
  return dist;
}

std::optional<std::size_t> shortest_odd_closed_walk(const Graph& g, Vertex v) {
  // Layered search over the bipartite double cover: reach[p] holds vertices
  // reachable from v by a walk of the current length with parity p.
  VertexSet seen[2];
  VertexSet frontier;
  frontier.set(v);
  seen[0] = frontier;
  for (std::size_t len = 1; len <= 2 * g.order() + 1; ++len) {
    VertexSet next;
    frontier.for_each([&](Vertex u) { next |= g.neighbors(u); });
    const std::size_t parity = len & 1U;
    next -= seen[parity];
    if (parity == 1 && next.test(v)) return len;
    if (next.empty()) return std::nullopt;
    seen[parity] |= next;
    frontier = next;
  }
  return std::nullopt;
}

OddGirth odd_girth(const Graph& g) {
  OddGirth best;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto w = shortest_odd_closed_walk(g, v);
    if (w && (!best.length || *w < *best.length)) best.length = w;
  }
  return best;
}

VertexSet second_neighborhood(const Graph& g, Vertex v) {
  VertexSet out;
  g.neighbors(v).for_each([&](Vertex u) { out |= g.neighbors(u); });
  out -= g.neighbors(v);
  out.reset(v);
  return out;
}

Graph blowup(const BlowupSpec& spec) {
  const Graph& p = spec.pattern;
  if (spec.blobs.size() != p.order())
    throw GraphError("blow-up needs " + std::to_string(p.order()) + " blob sizes, got " +
                     std::to_string(spec.blobs.size()));
  std::vector<std::size_t> start(p.order() + 1, 0);
  for (std::size_t i = 0; i < p.order(); ++i) start[i + 1] = start[i] + spec.blobs[i];
  std::vector<Edge> e;
  for (const auto& [a, b] : p.edges())
    for (std::size_t x = start[a]; x < start[a + 1]; ++x)
      for (std::size_t y = start[b]; y < start[b + 1]; ++y) e.emplace_back(x, y);
  return Graph(start.back(), e);
}

std::vector<std::size_t> balanced_blobs(std::size_t n, std::size_t m) {
  if (m == 0) throw GraphError("balanced_blobs needs at least one blob");
  std::vector<std::size_t> out(m, n / m);
  for (std::size_t i = 0; i < n % m; ++i) ++out[i];
  return out;
}

Graph balanced_cycle_blowup(std::size_t m, std::size_t n) {
  return blowup({cycle_graph(m), balanced_blobs(n, m)});
}

std::optional<std::vector<std::size_t>> recognize_cycle_blowup(const Graph& g, std::size_t m) {
  if (m < 5 || g.order() < m) return std::nullopt;
  // Blobs of a C_m blow-up (m >= 5) are exactly the classes of vertices
  // sharing an open neighbourhood.
  std::vector<std::size_t> cls(g.order());
  std::vector<Vertex> rep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return std::nullopt;
    auto it = std::find_if(rep.begin(), rep.end(), [&](Vertex r) { return g.neighbors(r) == g.neighbors(v); });
    if (it == rep.end()) {
      cls[v] = rep.size();
      rep.push_back(v);
    } else {
      cls[v] = static_cast<std::size_t>(it - rep.begin());
    }
  }
  if (rep.size() != m) return std::nullopt;
  std::vector<std::size_t> sizes(m, 0);
  for (Vertex v = 0; v < g.order(); ++v) ++sizes[cls[v]];
  std::vector<std::vector<std::size_t>> qadj(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      if (a != b && g.adjacent(rep[a], rep[b])) qadj[a].push_back(b);
  for (const auto& row : qadj)
    if (row.size() != 2) return std::nullopt;
  std::vector<std::size_t> order{0};
  std::size_t prev = 0, cur = qadj[0][0];
  while (cur != 0) {
    order.push_back(cur);
    std::size_t next = qadj[cur][0] == prev ? qadj[cur][1] : qadj[cur][0];
    prev = cur;
    cur = next;
    if (order.size() > m) return std::nullopt;
  }
  if (order.size() != m) return std::nullopt;
  std::vector<std::size_t> out;
  for (auto c : order) out.push_back(sizes[c]);
  return out;
}

}  // namespace oddcycle
