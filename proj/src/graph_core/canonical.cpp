#include "oddcycle/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "oddcycle/graph6.hpp"

namespace oddcycle {
namespace {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    const std::size_t n = g_.order();
    Partition root;
    if (n > 0) {
      Cell all(n);
      std::iota(all.begin(), all.end(), Vertex{0});
      root.push_back(std::move(all));
    }
    refine(root);
    std::vector<Vertex> fixed;
    search(root, fixed);
    return {best_labeling_, best_certificate_};
  }

 private:
  // Splits cells by neighbour counts into every current cell until stable.
  // Group order depends only on the counts, so the result is equivariant.
  void refine(Partition& cells) const {
    const std::size_t n = g_.order();
    std::vector<std::size_t> cell_of(n);
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c)
        for (Vertex v : cells[c]) cell_of[v] = c;
      Partition next;
      next.reserve(n);
      for (const Cell& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<std::size_t>, Cell> groups;
        for (Vertex v : cell) {
          std::vector<std::size_t> sig(cells.size(), 0);
          g_.neighbors(v).for_each([&](Vertex u) { ++sig[cell_of[u]]; });
          groups[std::move(sig)].push_back(v);
        }
        for (auto& [sig, members] : groups) next.push_back(std::move(members));
      }
      const bool changed = next.size() != cells.size();
      cells = std::move(next);
      if (!changed) return;
    }
  }

  bool twins(Vertex a, Vertex b) const {
    VertexSet na = g_.neighbors(a), nb = g_.neighbors(b);
    na.reset(b);
    nb.reset(a);
    return na == nb;
  }

  // Orbit representative of x under stored automorphisms fixing `fixed`.
  std::vector<Vertex> orbits(const std::vector<Vertex>& fixed) const {
    std::vector<Vertex> parent(g_.order());
    std::iota(parent.begin(), parent.end(), Vertex{0});
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(fixed.begin(), fixed.end(), [&](Vertex f) { return gamma[f] == f; })) continue;
      for (Vertex v = 0; v < gamma.size(); ++v) {
        Vertex a = find(v), b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < parent.size(); ++v) parent[v] = find(v);
    return parent;
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> labeling(g_.order());
    for (std::size_t c = 0; c < cells.size(); ++c) labeling[cells[c][0]] = c;
    std::string cert = write_graph6(g_.permuted(labeling));
    if (best_labeling_.empty() && g_.order() > 0) {
      best_labeling_ = labeling;
      best_certificate_ = std::move(cert);
      return;
    }
    if (cert == best_certificate_) {
      std::vector<Vertex> inverse(g_.order());
      for (Vertex v = 0; v < g_.order(); ++v) inverse[best_labeling_[v]] = v;
      std::vector<Vertex> gamma(g_.order());
      for (Vertex v = 0; v < g_.order(); ++v) gamma[v] = inverse[labeling[v]];
      automorphisms_.push_back(std::move(gamma));
    } else if (cert > best_certificate_) {
      best_labeling_ = labeling;
      best_certificate_ = std::move(cert);
    }
  }

  void search(const Partition& cells, std::vector<Vertex>& fixed) {
    auto target = std::find_if(cells.begin(), cells.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<Vertex> tried;
    for (Vertex x : cells[t]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex y) { return twins(x, y); })) continue;
      if (!tried.empty()) {
        const auto orb = orbits(fixed);
        if (std::any_of(tried.begin(), tried.end(), [&](Vertex y) { return orb[x] == orb[y]; })) continue;
      }
      tried.push_back(x);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != t) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({x});
        Cell rest;
        for (Vertex v : cells[c])
          if (v != x) rest.push_back(v);
        child.push_back(std::move(rest));
      }
      refine(child);
      fixed.push_back(x);
      search(child, fixed);
      fixed.pop_back();
    }
  }

  const Graph& g_;
  std::vector<Vertex> best_labeling_;
  std::string best_certificate_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) {
  if (g.order() == 0) return {{}, write_graph6(g)};
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g) { return g.permuted(canonical_form(g).labeling); }

}  // namespace oddcycle
