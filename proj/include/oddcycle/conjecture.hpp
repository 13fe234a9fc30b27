#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "oddcycle/numeric.hpp"
#include "oddcycle/search.hpp"

namespace oddcycle {

/// Two candidate leading coefficients for the number of C_k in the balanced
/// blow-up of C_{l+2} with blobs of size t (count ~ coefficient * t^k).
struct Conjecture2Coefficient {
  std::size_t k = 0;
  std::size_t l = 0;
  /// C(k,(k-(l+2))/2) + C(k,(k-3(l+2))/2) + ...
  BigInt binomial_sum = 0;
  /// Closed walks of length k with odd winding in C_{l+2}, rooted at any
  /// vertex, divided by the 2k rootings of a cycle: (l+2) * binomial_sum / k.
  Rational walk_reference = 0;
};

/// Throws std::invalid_argument unless k > l >= 3 are both odd.
Conjecture2Coefficient conjecture2_coefficient(std::size_t k, std::size_t l);

struct BlowupFitRow {
  std::size_t t = 0;
  BigInt exact_count = 0;
  Rational ratio = 0;  // exact_count / t^k
};

/// Exact C_k counts in balanced blow-ups of C_m, blob size t in [t_min, t_max].
std::vector<BlowupFitRow> blowup_leading_fit(std::size_t k, std::size_t m, std::size_t t_min, std::size_t t_max,
                                             std::size_t workers = 1);

struct ConjectureReport {
  std::string conjecture;  // "1", "2" or "observation"
  std::size_t n = 0;
  std::size_t k = 0;
  /// Conjecture 1 / observation: the exhaustive search run.
  std::optional<SearchReport> search;
  /// Conjecture 2: reference values and measurements.
  std::optional<Conjecture2Coefficient> coefficient;
  std::vector<BlowupFitRow> fit;
  /// True when no counterexample was found (conjectures 1 and observation);
  /// for conjecture 2 nothing is asserted and this stays true.
  bool holds = true;
  std::vector<std::string> findings;
};

/// Max induced C_k over triangle-free graphs on n vertices against (n/k)^k.
ConjectureReport probe_conjecture1(std::size_t n, std::size_t k, std::size_t workers = 1);

/// Max induced C_k over the even-k observation class on n vertices.
ConjectureReport probe_observation(std::size_t n, std::size_t k, std::size_t workers = 1);

/// Both reference coefficients next to measured ratios for blob sizes
/// 1..t_max in the blow-up of C_{l+2}.
ConjectureReport probe_conjecture2(std::size_t k, std::size_t l, std::size_t t_max, std::size_t workers = 1);

}  // namespace oddcycle
