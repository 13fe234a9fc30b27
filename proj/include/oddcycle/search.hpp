#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "oddcycle/graph.hpp"
#include "oddcycle/numeric.hpp"

namespace oddcycle {

enum class ConstraintKind { OddGirthAtLeast, TriangleFree, ObservationClass, Unconstrained };

struct ConstraintClass {
  ConstraintKind kind = ConstraintKind::Unconstrained;
  /// Odd-girth threshold or the even length of the observation class.
  std::size_t parameter = 0;

  static ConstraintClass odd_girth_at_least(std::size_t k) { return {ConstraintKind::OddGirthAtLeast, k}; }
  static ConstraintClass triangle_free() { return {ConstraintKind::TriangleFree, 0}; }
  /// Throws std::invalid_argument unless k is even and >= 8.
  static ConstraintClass observation(std::size_t k);
  static ConstraintClass unconstrained() { return {ConstraintKind::Unconstrained, 0}; }

  bool admits(const Graph& g) const;
  /// Assuming g minus vertex v is admitted, is g admitted?
  bool admits_extension(const Graph& g, Vertex v) const;
  /// True when membership implies there is no odd cycle shorter than k.
  bool implies_odd_girth(std::size_t k) const;
  std::string name() const;

  friend bool operator==(const ConstraintClass&, const ConstraintClass&) = default;
};

enum class CountMode { Plain, Induced };

BigInt count_in_mode(const Graph& g, std::size_t k, CountMode mode, std::size_t workers = 1);

/// Feasibility cap for built-in exhaustive generation.
inline constexpr std::size_t kMaxExhaustiveOrder = 12;

/// Emits one graph per isomorphism class on n vertices satisfying the
/// (hereditary) constraint, by adding vertices one at a time to the classes
/// on n-1 vertices and discarding isomorphic duplicates. Emission order is
/// by canonical certificate. Throws std::invalid_argument above the cap.
void generate_constrained_graphs(std::size_t n, const ConstraintClass& constraint,
                                 const std::function<void(const Graph&)>& sink);

std::vector<Graph> constrained_graphs(std::size_t n, const ConstraintClass& constraint);

/// Keeps the graphs of a stream that satisfy the constraint, one per
/// isomorphism class.
std::vector<Graph> filter_constrained(const std::vector<Graph>& graphs, const ConstraintClass& constraint);

enum class SearchMode { Exhaustive, HillClimb, Filter };

struct SearchReport {
  std::size_t n = 0;
  std::size_t k = 0;
  ConstraintClass constraint;
  CountMode count_mode = CountMode::Plain;
  SearchMode mode = SearchMode::Exhaustive;
  BigInt best_count = 0;
  /// floor(n^k / k^k)
  BigInt bound_floor = 0;
  bool within_bound = true;
  bool reached_bound = false;
  /// Canonically labelled graph6, deduplicated and sorted.
  std::vector<std::string> extremal_graphs;
  std::uint64_t graphs_examined = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
};

BigInt bound_floor(std::size_t n, std::size_t k);

SearchReport exhaustive_search(std::size_t n, std::size_t k, const ConstraintClass& constraint,
                               CountMode mode = CountMode::Plain, std::size_t workers = 1);

/// Same report over an externally supplied list of graphs.
SearchReport search_graphs(const std::vector<Graph>& graphs, std::size_t n, std::size_t k,
                           const ConstraintClass& constraint, CountMode mode = CountMode::Plain);

struct HillClimbOptions {
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;  // edge toggles
  std::size_t workers = 1;
  CountMode count_mode = CountMode::Plain;
};

/// Seeded local search over edge toggles. Toggles that leave the class are
/// rejected, non-worsening moves are accepted, and stalled runs restart
/// alternately from a blow-up and a random bipartite graph. With several
/// workers the budget is split over independent chains seeded seed ^ index.
SearchReport hill_climb(std::size_t n, std::size_t k, const ConstraintClass& constraint,
                        const HillClimbOptions& options);

/// splitmix64-based generator; split(i) gives the stream for branch i.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  std::uint64_t below(std::uint64_t bound);
  SplitRng split(std::uint64_t branch) const { return SplitRng(state_ ^ branch); }

 private:
  std::uint64_t state_;
};

}  // namespace oddcycle
