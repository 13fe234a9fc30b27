#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "oddcycle/cycles.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/numeric.hpp"

namespace oddcycle {

/// A cycle traversal v_0 v_1 ... v_{k-1} with positions 2 and 3 exchanged:
/// z = (v_0, v_1, v_3, v_2, v_4, ..., v_{k-1}).
struct GoodSequence {
  std::vector<Vertex> z;
  /// Index j of the cycle vertex the traversal starts from.
  std::size_t start = 0;
  /// False for the orientation of CycleInstance::vertices, true for the reverse.
  bool reversed = false;

  std::size_t length() const { return z.size(); }
};

/// The 2k good sequences of an odd cycle of length k >= 7. Entries 0..k-1
/// are D_0..D_{k-1} (same orientation as c, D_j starting at v_j); entries
/// k..2k-1 are the reversed orientation. Throws std::invalid_argument for
/// even k or k < 7.
std::vector<GoodSequence> good_sequences(const CycleInstance& c);

/// D_j alone.
GoodSequence good_sequence(const CycleInstance& c, std::size_t start, bool reversed = false);

struct ASetProfile {
  std::vector<VertexSet> sets;
  std::vector<std::size_t> sizes;
};

/// A_i depends only on z_0..z_{i-1}; `z` may be a prefix, in which case the
/// sets A_0..A_{|z|} are produced (capped at k). Throws std::invalid_argument
/// on repeated vertices.
ASetProfile a_sets(const Graph& g, const std::vector<Vertex>& z, std::size_t k);
ASetProfile a_sets(const Graph& g, const GoodSequence& d);

/// Thrown when a weight would divide by an empty A-set.
class UndefinedWeight : public std::runtime_error {
 public:
  UndefinedWeight(std::vector<Vertex> sequence, std::size_t index);
  const std::vector<Vertex>& sequence() const { return sequence_; }
  std::size_t index() const { return index_; }

 private:
  std::vector<Vertex> sequence_;
  std::size_t index_;
};

/// Product of 1/|A_i(D)|.
Rational weight(const Graph& g, const GoodSequence& d);

struct CycleWeight {
  CycleInstance cycle;
  Rational total;  // sum over its 2k good sequences
};

struct Claim1Report {
  std::size_t k = 0;
  Rational total = 0;
  bool holds = true;              // total <= 1
  bool precondition_met = true;   // odd girth >= k
  std::size_t cycles = 0;
  std::vector<CycleWeight> per_cycle;
};

/// Sums the weights of every good sequence of every k-cycle. Throws
/// UndefinedWeight (carrying the sequence) when some cycle is not induced.
Claim1Report claim1_report(const Graph& g, std::size_t k, bool keep_per_cycle = false);

struct PrefixBound {
  Rational lhs;  // weights of good sequences starting with the prefix
  Rational rhs;  // product of 1/|A_i| for i up to the prefix length - 1
  bool holds = false;
};

/// The inductive step of the weight-sum bound for a fixed prefix
/// z_0..z_l (l = prefix.size() - 1; an empty prefix gives rhs = 1).
/// Throws std::invalid_argument if some A_i with i <= l is empty.
PrefixBound claim1_prefix_bound(const Graph& g, const std::vector<Vertex>& prefix, std::size_t k);

/// n[i][j] = |A_i(D_j)|.
struct SizeMatrix {
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> n;
  std::size_t at(std::size_t i, std::size_t j) const { return n[i][j]; }
};

/// Throws std::invalid_argument if c has a chord or an unsupported length.
SizeMatrix size_matrix(const Graph& g, const CycleInstance& c);

struct VertexContribution {
  Vertex vertex = 0;
  /// Twice the contribution: A_1 memberships count 1, all others 2.
  std::size_t twice_value = 0;
  Rational value = 0;
  /// |N(w) ∩ C|.
  std::size_t neighbor_class = 0;
  /// Class 2 only: the two neighbours sit at distance two along the cycle.
  bool neighbors_at_distance_two = false;
  /// k-2, k-3+1/2 or k-1 for classes 0, 1, 2; unset when the class is >= 3.
  std::optional<Rational> class_bound;
  bool within_bound = false;
  bool precondition_violated = false;  // three or more neighbours on C
  /// member[i][j]: w in A_i(D_j), i = 1..k-1.
  std::vector<std::vector<bool>> member;
};

VertexContribution vertex_contribution(const Graph& g, const CycleInstance& c, Vertex w);

struct StarProperty {
  bool holds = false;
  std::vector<Vertex> at_distance_two;  // cycle vertices at graph distance 2
  std::vector<Vertex> neighbors_on_cycle;
  std::optional<Edge> adjacent_pair;
};

StarProperty star_property(const Graph& g, const CycleInstance& c, Vertex w);

struct Claim2Report {
  Rational lhs = 0;
  BigInt rhs = 0;  // n(k-1)
  bool holds = false;
  bool equality = false;
  /// Every vertex has exactly two neighbours on C, at distance two along C.
  bool equality_condition_holds = false;
  /// lhs equals the sum of the per-vertex contributions.
  bool ledger_identity = false;
  /// Every vertex respects its class bound.
  bool case_bounds_hold = false;
  std::vector<VertexContribution> per_vertex;
};

Claim2Report claim2_report(const Graph& g, const CycleInstance& c);

/// The chain expr1 <= amgm1 <= amgm2 <= (n/k)^k for one cycle. amgm1 is a
/// k-th root and generally irrational, so its k-th power is carried and all
/// comparisons are made between k-th powers.
struct CycleBound {
  Rational expr1;
  Rational amgm1_kth_power;
  Rational amgm2;
  Rational final_bound;
  bool step1 = false;  // expr1 <= amgm1
  bool step2 = false;  // amgm1 <= amgm2
  bool step3 = false;  // amgm2 <= (n/k)^k
  bool step1_equal = false;
  bool step2_equal = false;
  bool step3_equal = false;
  bool chain_ok = false;
};

CycleBound cycle_bound(const Graph& g, const CycleInstance& c);
CycleBound cycle_bound(const SizeMatrix& m, std::size_t n, const Rational& claim2_lhs);

struct CycleCheck {
  CycleInstance cycle;
  Claim2Report claim2;
  CycleBound bound;
};

struct TheoremReport {
  std::size_t n = 0;
  std::size_t k = 0;
  OddGirth girth;
  bool odd_girth_ok = false;
  bool all_cycles_induced = false;
  BigInt cycle_count = 0;
  BigInt induced_cycle_count = 0;
  std::optional<Claim1Report> claim1;
  std::optional<std::string> claim1_error;
  std::size_t cycles_checked = 0;
  bool claim2_all_hold = true;
  bool claim2_identities_hold = true;
  bool case_bounds_hold = true;
  bool star_property_holds = true;
  bool chains_ok = true;
  /// k^k * count <= n^k.
  bool bound_ok = false;
  bool bound_equality = false;
  Rational bound = 0;  // (n/k)^k
  std::optional<std::vector<std::size_t>> blowup_blobs;
  bool balanced_blowup = false;
  bool passed = false;
  std::vector<std::string> failures;
  std::vector<CycleCheck> per_cycle;  // only when requested
};

/// Runs every check on g; failures are recorded, never thrown. Throws
/// std::invalid_argument only for an unsupported k.
TheoremReport verify_theorem(const Graph& g, std::size_t k, bool keep_per_cycle = false);

}  // namespace oddcycle
