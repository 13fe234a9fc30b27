#include "oddcycle/search.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "oddcycle/canonical.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/graph6.hpp"

namespace oddcycle {
namespace {

bool has_no_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    bool hit = false;
    g.neighbors(u).for_each([&](Vertex v) {
      if (v > u && g.neighbors(u).intersects(g.neighbors(v))) hit = true;
    });
    if (hit) return false;
  }
  return true;
}

bool independent(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex u) { ok = ok && !g.neighbors(u).intersects(s); });
  return ok;
}

}  // namespace

ConstraintClass ConstraintClass::observation(std::size_t k) {
  if (k % 2 != 0 || k < 8)
    throw std::invalid_argument("observation class needs an even length >= 8, got " + std::to_string(k));
  return {ConstraintKind::ObservationClass, k};
}

bool ConstraintClass::admits(const Graph& g) const {
  switch (kind) {
    case ConstraintKind::OddGirthAtLeast:
      return odd_girth(g).at_least(parameter);
    case ConstraintKind::TriangleFree:
      return has_no_triangle(g);
    case ConstraintKind::ObservationClass:
      return observation_class_check(g, parameter);
    case ConstraintKind::Unconstrained:
      return true;
  }
  return false;
}

bool ConstraintClass::admits_extension(const Graph& g, Vertex v) const {
  switch (kind) {
    case ConstraintKind::OddGirthAtLeast: {
      // Any new short odd cycle passes through v, and a shortest odd closed
      // walk through v contains an odd cycle no longer than itself.
      const auto walk = shortest_odd_closed_walk(g, v);
      return !walk || *walk >= parameter;
    }
    case ConstraintKind::TriangleFree:
      return independent(g, g.neighbors(v));
    case ConstraintKind::ObservationClass:
      return !observation_class_violation_through(g, parameter, v).has_value();
    case ConstraintKind::Unconstrained:
      return true;
  }
  return false;
}

bool ConstraintClass::implies_odd_girth(std::size_t k) const {
  switch (kind) {
    case ConstraintKind::OddGirthAtLeast:
      return parameter >= k;
    case ConstraintKind::TriangleFree:
      return k <= 5;
    case ConstraintKind::ObservationClass:
      // A shortest odd cycle is chordless, so excluding induced odd cycles
      // below the class length excludes all of them.
      return parameter >= k;
    case ConstraintKind::Unconstrained:
      return k <= 3;
  }
  return false;
}

std::string ConstraintClass::name() const {
  switch (kind) {
    case ConstraintKind::OddGirthAtLeast:
      return "odd-girth>=" + std::to_string(parameter);
    case ConstraintKind::TriangleFree:
      return "triangle-free";
    case ConstraintKind::ObservationClass:
      return "observation(k=" + std::to_string(parameter) + ")";
    case ConstraintKind::Unconstrained:
      return "unconstrained";
  }
  return "?";
}

BigInt count_in_mode(const Graph& g, std::size_t k, CountMode mode, std::size_t workers) {
  return mode == CountMode::Induced ? count_induced_cycles(g, k, workers) : count_cycles(g, k, workers);
}

void generate_constrained_graphs(std::size_t n, const ConstraintClass& constraint,
                                 const std::function<void(const Graph&)>& sink) {
  if (n > kMaxExhaustiveOrder)
    throw std::invalid_argument("built-in generation is limited to n <= " + std::to_string(kMaxExhaustiveOrder));
  // level: certificate -> canonical graph, for the current order.
  std::map<std::string, Graph> level;
  level.emplace(write_graph6(Graph()), Graph());
  for (std::size_t m = 1; m <= n; ++m) {
    std::map<std::string, Graph> next;
    const std::uint64_t subsets = std::uint64_t{1} << (m - 1);
    for (const auto& [cert, parent] : level) {
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        VertexSet nbrs;
        for (std::size_t b = 0; b + 1 < m; ++b)
          if ((mask >> b) & 1U) nbrs.set(b);
        Graph child = parent.with_vertex(nbrs);
        if (!constraint.admits_extension(child, m - 1)) continue;
        auto form = canonical_form(child);
        if (next.contains(form.certificate)) continue;
        next.emplace(std::move(form.certificate), child.permuted(form.labeling));
      }
    }
    level = std::move(next);
  }
  for (const auto& [cert, g] : level) sink(g);
}

std::vector<Graph> constrained_graphs(std::size_t n, const ConstraintClass& constraint) {
  std::vector<Graph> out;
  generate_constrained_graphs(n, constraint, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Graph> filter_constrained(const std::vector<Graph>& graphs, const ConstraintClass& constraint) {
  std::map<std::string, Graph> kept;
  for (const auto& g : graphs) {
    if (!constraint.admits(g)) continue;
    auto form = canonical_form(g);
    if (!kept.contains(form.certificate)) kept.emplace(std::move(form.certificate), g.permuted(form.labeling));
  }
  std::vector<Graph> out;
  for (auto& [cert, g] : kept) out.push_back(std::move(g));
  return out;
}

BigInt bound_floor(std::size_t n, std::size_t k) {
  return pow(BigInt(n), static_cast<unsigned>(k)) / pow(BigInt(k), static_cast<unsigned>(k));
}

SearchReport search_graphs(const std::vector<Graph>& graphs, std::size_t n, std::size_t k,
                           const ConstraintClass& constraint, CountMode mode) {
  SearchReport r;
  r.n = n;
  r.k = k;
  r.constraint = constraint;
  r.count_mode = mode;
  r.mode = SearchMode::Filter;
  r.bound_floor = bound_floor(n, k);
  std::set<std::string> extremal;
  for (const auto& g : graphs) {
    ++r.graphs_examined;
    const BigInt c = count_in_mode(g, k, mode);
    if (c > r.best_count) {
      r.best_count = c;
      extremal.clear();
    }
    if (c == r.best_count) extremal.insert(canonical_form(g).certificate);
  }
  r.extremal_graphs.assign(extremal.begin(), extremal.end());
  r.within_bound = r.best_count <= r.bound_floor;
  r.reached_bound = r.best_count == r.bound_floor;
  return r;
}

SearchReport exhaustive_search(std::size_t n, std::size_t k, const ConstraintClass& constraint, CountMode mode,
                               std::size_t workers) {
  const auto graphs = constrained_graphs(n, constraint);
  workers = std::max<std::size_t>(1, std::min(workers, graphs.size()));
  std::vector<BigInt> counts(graphs.size());
  auto work = [&](std::size_t w) {
    for (std::size_t i = w; i < graphs.size(); i += workers) counts[i] = count_in_mode(graphs[i], k, mode);
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  SearchReport r;
  r.n = n;
  r.k = k;
  r.constraint = constraint;
  r.count_mode = mode;
  r.mode = SearchMode::Exhaustive;
  r.bound_floor = bound_floor(n, k);
  r.graphs_examined = graphs.size();
  for (const auto& c : counts) r.best_count = std::max(r.best_count, c);
  // Generated graphs are already canonically labelled.
  for (std::size_t i = 0; i < graphs.size(); ++i)
    if (counts[i] == r.best_count) r.extremal_graphs.push_back(write_graph6(graphs[i]));
  std::sort(r.extremal_graphs.begin(), r.extremal_graphs.end());
  r.within_bound = r.best_count <= r.bound_floor;
  r.reached_bound = r.best_count == r.bound_floor;
  return r;
}

std::uint64_t SplitRng::next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitRng::below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

namespace {

constexpr std::size_t kMaxRecordedExtremal = 32;

struct ChainResult {
  BigInt best = -1;
  std::set<std::string> extremal;
  std::uint64_t examined = 0;
};

class Climber {
 public:
  Climber(std::size_t n, std::size_t k, const ConstraintClass& constraint, CountMode mode, SplitRng rng)
      : n_(n), k_(k), constraint_(constraint), mode_(mode), rng_(rng) {}

  ChainResult run(std::uint64_t budget) {
    restart();
    const std::uint64_t stall_limit = std::max<std::uint64_t>(1000, budget / 10);
    std::uint64_t stall = 0;
    for (std::uint64_t step = 0; step < budget && n_ >= 2; ++step) {
      const Vertex u = rng_.below(n_);
      Vertex v = rng_.below(n_ - 1);
      if (v >= u) ++v;
      Graph next = current_.with_toggled(u, v);
      if (admits_toggle(next, u, v)) {
        ++result_.examined;
        BigInt c = count_in_mode(next, k_, mode_);
        if (c >= current_count_) {
          stall = c > current_count_ ? 0 : stall + 1;
          current_ = std::move(next);
          current_count_ = std::move(c);
          record();
        } else {
          ++stall;
        }
      } else {
        ++stall;
      }
      if (stall >= stall_limit) {
        restart();
        stall = 0;
      }
    }
    return std::move(result_);
  }

 private:
  bool admits_toggle(const Graph& g, Vertex u, Vertex v) const {
    const bool added = g.adjacent(u, v);
    switch (constraint_.kind) {
      case ConstraintKind::OddGirthAtLeast:
      case ConstraintKind::TriangleFree:
        // Deleting an edge cannot create a cycle; a new one uses edge uv.
        return !added || constraint_.admits_extension(g, u);
      default:
        return constraint_.admits(g);
    }
  }

  Graph blowup_seed() const {
    if (n_ >= k_ && k_ >= 3) {
      Graph g = balanced_cycle_blowup(k_, n_);
      if (constraint_.admits(g)) return g;
    }
    return empty_graph(n_);
  }

  Graph bipartite_seed() {
    std::vector<bool> side(n_);
    for (std::size_t v = 0; v < n_; ++v) side[v] = rng_.below(2) == 1;
    std::vector<Edge> e;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (side[a] != side[b] && rng_.below(2) == 1) e.emplace_back(a, b);
    Graph g(n_, e);
    return constraint_.admits(g) ? g : empty_graph(n_);
  }

  void restart() {
    current_ = restarts_ % 2 == 0 ? blowup_seed() : bipartite_seed();
    ++restarts_;
    ++result_.examined;
    current_count_ = count_in_mode(current_, k_, mode_);
    record();
  }

  void record() {
    if (current_count_ > result_.best) {
      result_.best = current_count_;
      result_.extremal.clear();
    }
    if (current_count_ == result_.best && result_.extremal.size() < kMaxRecordedExtremal)
      result_.extremal.insert(canonical_form(current_).certificate);
  }

  std::size_t n_, k_;
  ConstraintClass constraint_;
  CountMode mode_;
  SplitRng rng_;
  Graph current_;
  BigInt current_count_ = 0;
  std::uint64_t restarts_ = 0;
  ChainResult result_;
};

}  // namespace

SearchReport hill_climb(std::size_t n, std::size_t k, const ConstraintClass& constraint,
                        const HillClimbOptions& options) {
  const std::size_t chains = std::max<std::size_t>(1, options.workers);
  std::vector<ChainResult> results(chains);
  auto work = [&](std::size_t i) {
    std::uint64_t share = options.budget / chains + (i < options.budget % chains ? 1 : 0);
    Climber climber(n, k, constraint, options.count_mode, SplitRng(options.seed ^ i));
    results[i] = climber.run(share);
  };
  if (chains == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t i = 0; i < chains; ++i) pool.emplace_back(work, i);
  }
  SearchReport r;
  r.n = n;
  r.k = k;
  r.constraint = constraint;
  r.count_mode = options.count_mode;
  r.mode = SearchMode::HillClimb;
  r.seed = options.seed;
  r.budget = options.budget;
  r.bound_floor = bound_floor(n, k);
  std::set<std::string> extremal;
  for (auto& c : results) {
    r.graphs_examined += c.examined;
    if (c.best > r.best_count) {
      r.best_count = c.best;
      extremal.clear();
    }
    if (c.best == r.best_count) extremal.insert(c.extremal.begin(), c.extremal.end());
  }
  r.extremal_graphs.assign(extremal.begin(), extremal.end());
  if (r.extremal_graphs.size() > kMaxRecordedExtremal) r.extremal_graphs.resize(kMaxRecordedExtremal);
  r.within_bound = r.best_count <= r.bound_floor;
  r.reached_bound = r.best_count == r.bound_floor;
  return r;
}

}  // namespace oddcycle
