#include "oddcycle/cycles.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace oddcycle {
namespace {

void require_length(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle length must be at least 3, got " + std::to_string(k));
}

// Depth-first extension of paths root = p[0], p[1], ... inside `allowed`.
// A path vertex at position q must lie within distance k - q of the root
// (measured inside allowed + root), and the closing vertex must exceed p[1],
// so every cycle through the root is reached in exactly one direction.
class CycleWalker {
 public:
  CycleWalker(const Graph& g, std::size_t k, bool induced, Vertex root, const VertexSet& allowed)
      : g_(g), k_(k), induced_(induced), root_(root), allowed_(allowed), path_(k) {
    // within_[r]: vertices of allowed within distance r of the root.
    within_.resize(k + 1);
    VertexSet seen;
    seen.set(root);
    VertexSet frontier = seen;
    within_[0] = VertexSet{};
    for (std::size_t r = 1; r <= k; ++r) {
      VertexSet next;
      frontier.for_each([&](Vertex u) { next |= g.neighbors(u); });
      next &= allowed_;
      next -= seen;
      seen |= next;
      frontier = next;
      within_[r] = seen - single(root);
    }
    path_[0] = root;
  }

  template <typename OnCycle>
  void walk(OnCycle&& on_cycle) {
    VertexSet onpath = single(root_);
    extend(0, onpath, VertexSet{}, on_cycle);
  }

  unsigned __int128 count() {
    unsigned __int128 total = 0;
    VertexSet onpath = single(root_);
    count_from(0, onpath, VertexSet{}, total);
    return total;
  }

  const std::vector<Vertex>& path() const { return path_; }

 private:
  static VertexSet single(Vertex v) {
    VertexSet s;
    s.set(v);
    return s;
  }

  VertexSet candidates(std::size_t d, const VertexSet& onpath, const VertexSet& interior) const {
    const std::size_t q = d + 1;
    VertexSet cand = g_.neighbors(path_[d]) & allowed_;
    cand -= onpath;
    if (q == k_ - 1) {
      cand &= g_.neighbors(root_);
      cand &= VertexSet::above(path_[1], g_.order());
      if (induced_) cand -= interior;
    } else {
      cand &= within_[k_ - q];
      if (induced_ && q >= 2) {
        cand -= interior;
        cand -= g_.neighbors(root_);
      }
    }
    return cand;
  }

  template <typename OnCycle>
  bool extend(std::size_t d, const VertexSet& onpath, const VertexSet& interior, OnCycle& on_cycle) {
    const VertexSet cand = candidates(d, onpath, interior);
    const VertexSet next_interior = d >= 1 ? interior | g_.neighbors(path_[d]) : interior;
    bool keep_going = true;
    cand.for_each([&](Vertex x) {
      if (!keep_going) return;
      path_[d + 1] = x;
      if (d + 2 == k_) {
        keep_going = on_cycle(path_);
        return;
      }
      VertexSet next_onpath = onpath;
      next_onpath.set(x);
      keep_going = extend(d + 1, next_onpath, next_interior, on_cycle);
    });
    return keep_going;
  }

  void count_from(std::size_t d, const VertexSet& onpath, const VertexSet& interior, unsigned __int128& total) {
    const VertexSet cand = candidates(d, onpath, interior);
    if (d + 2 == k_) {
      total += cand.count();
      return;
    }
    const VertexSet next_interior = d >= 1 ? interior | g_.neighbors(path_[d]) : interior;
    cand.for_each([&](Vertex x) {
      path_[d + 1] = x;
      VertexSet next_onpath = onpath;
      next_onpath.set(x);
      count_from(d + 1, next_onpath, next_interior, total);
    });
  }

  const Graph& g_;
  std::size_t k_;
  bool induced_;
  Vertex root_;
  VertexSet allowed_;
  std::vector<VertexSet> within_;
  std::vector<Vertex> path_;
};

BigInt to_big(unsigned __int128 v) {
  BigInt hi = static_cast<std::uint64_t>(v >> 64);
  BigInt lo = static_cast<std::uint64_t>(v);
  return (hi << 64) + lo;
}

BigInt count_impl(const Graph& g, std::size_t k, bool induced, std::size_t workers) {
  require_length(k);
  const std::size_t n = g.order();
  if (n < k) return 0;
  workers = std::max<std::size_t>(1, std::min(workers, n));
  std::atomic<std::size_t> next_root{0};
  std::vector<unsigned __int128> partial(workers, 0);
  auto work = [&](std::size_t w) {
    for (std::size_t r = next_root++; r + k <= n; r = next_root++) {
      CycleWalker walker(g, k, induced, r, VertexSet::above(r, n));
      partial[w] += walker.count();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  BigInt total = 0;
  for (auto p : partial) total += to_big(p);
  return total;
}

}  // namespace

VertexSet CycleInstance::vertex_set() const {
  VertexSet s;
  for (Vertex v : vertices) s.set(v);
  return s;
}

CycleInstance canonical_cycle(std::vector<Vertex> order) {
  if (order.empty()) return {};
  auto mn = std::min_element(order.begin(), order.end());
  std::rotate(order.begin(), mn, order.end());
  if (order.size() > 2 && order.back() < order[1]) std::reverse(order.begin() + 1, order.end());
  return {std::move(order)};
}

void enumerate_cycles(const Graph& g, std::size_t k, bool induced_only, const CycleVisitor& visit) {
  require_length(k);
  const std::size_t n = g.order();
  for (Vertex r = 0; r + k <= n; ++r) {
    CycleWalker walker(g, k, induced_only, r, VertexSet::above(r, n));
    bool keep_going = true;
    walker.walk([&](const std::vector<Vertex>& p) {
      keep_going = visit(CycleInstance{p});
      return keep_going;
    });
    if (!keep_going) return;
  }
}

void enumerate_cycles_through(const Graph& g, std::size_t k, bool induced_only, Vertex v,
                              const CycleVisitor& visit) {
  require_length(k);
  if (v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  if (g.order() < k) return;
  VertexSet allowed = g.vertices();
  allowed.reset(v);
  CycleWalker walker(g, k, induced_only, v, allowed);
  walker.walk([&](const std::vector<Vertex>& p) { return visit(canonical_cycle(p)); });
}

bool has_cycle_through(const Graph& g, std::size_t k, bool induced_only, Vertex v) {
  bool found = false;
  enumerate_cycles_through(g, k, induced_only, v, [&](const CycleInstance&) {
    found = true;
    return false;
  });
  return found;
}

std::vector<CycleInstance> list_cycles(const Graph& g, std::size_t k, bool induced_only) {
  std::vector<CycleInstance> out;
  enumerate_cycles(g, k, induced_only, [&](const CycleInstance& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

BigInt count_cycles(const Graph& g, std::size_t k, std::size_t workers) { return count_impl(g, k, false, workers); }

BigInt count_induced_cycles(const Graph& g, std::size_t k, std::size_t workers) {
  return count_impl(g, k, true, workers);
}

namespace {

// Hexagon order h with 1 or 2 antipodal chords and nothing else, if the
// 6-cycle c has that shape.
bool hexagon_has_main_diagonals(const Graph& g, const CycleInstance& c) {
  std::size_t diagonals = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 2; j < 6; ++j) {
      if (i == 0 && j == 5) continue;
      if (!g.adjacent(c.vertices[i], c.vertices[j])) continue;
      if (j - i != 3) return false;
      ++diagonals;
    }
  return diagonals == 1 || diagonals == 2;
}

std::optional<ClassViolation> c6_violation(std::optional<std::vector<Vertex>> hex) {
  if (!hex) return std::nullopt;
  return ClassViolation{"C6 with main diagonals", std::move(*hex)};
}

void require_observation_length(std::size_t k) {
  if (k % 2 != 0 || k < 8)
    throw std::invalid_argument("observation class needs an even length >= 8, got " + std::to_string(k));
}

}  // namespace

std::optional<std::vector<Vertex>> find_induced_c6_with_diagonals(const Graph& g) {
  std::optional<std::vector<Vertex>> found;
  enumerate_cycles(g, 6, false, [&](const CycleInstance& c) {
    if (!hexagon_has_main_diagonals(g, c)) return true;
    found = c.vertices;
    return false;
  });
  return found;
}

std::optional<std::vector<Vertex>> find_induced_c6_with_diagonals_through(const Graph& g, Vertex v) {
  std::optional<std::vector<Vertex>> found;
  enumerate_cycles_through(g, 6, false, v, [&](const CycleInstance& c) {
    if (!hexagon_has_main_diagonals(g, c)) return true;
    found = c.vertices;
    return false;
  });
  return found;
}

std::optional<ClassViolation> observation_class_violation(const Graph& g, std::size_t k) {
  require_observation_length(k);
  std::vector<std::size_t> lengths{3};
  for (std::size_t l = 5; l < k; ++l) lengths.push_back(l);
  for (std::size_t l : lengths) {
    std::optional<ClassViolation> v;
    enumerate_cycles(g, l, true, [&](const CycleInstance& c) {
      v = ClassViolation{"induced C" + std::to_string(l), c.vertices};
      return false;
    });
    if (v) return v;
  }
  return c6_violation(find_induced_c6_with_diagonals(g));
}

std::optional<ClassViolation> observation_class_violation_through(const Graph& g, std::size_t k, Vertex x) {
  require_observation_length(k);
  std::vector<std::size_t> lengths{3};
  for (std::size_t l = 5; l < k; ++l) lengths.push_back(l);
  for (std::size_t l : lengths) {
    std::optional<ClassViolation> v;
    enumerate_cycles_through(g, l, true, x, [&](const CycleInstance& c) {
      v = ClassViolation{"induced C" + std::to_string(l), c.vertices};
      return false;
    });
    if (v) return v;
  }
  return c6_violation(find_induced_c6_with_diagonals_through(g, x));
}

}  // namespace oddcycle
