#include "oddcycle/conjecture.hpp"

#include <stdexcept>

#include "oddcycle/cycles.hpp"
#include "oddcycle/graph.hpp"

namespace oddcycle {
namespace {

BigInt binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  BigInt out = 1;
  for (std::size_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

std::string bound_finding(const SearchReport& s, const std::string& what) {
  return what + ": max " + to_string(s.best_count) + " vs floor((n/k)^k) = " + to_string(s.bound_floor) +
         (s.within_bound ? " (holds)" : " (COUNTEREXAMPLE)");
}

}  // namespace

Conjecture2Coefficient conjecture2_coefficient(std::size_t k, std::size_t l) {
  if (k % 2 == 0 || l % 2 == 0 || l < 3 || k <= l)
    throw std::invalid_argument("need odd k > l >= 3, got k=" + std::to_string(k) + ", l=" + std::to_string(l));
  Conjecture2Coefficient c;
  c.k = k;
  c.l = l;
  const std::size_t m = l + 2;
  for (std::size_t w = 1; w * m <= k; w += 2) c.binomial_sum += binomial(k, (k - w * m) / 2);
  c.walk_reference = Rational(BigInt(m) * c.binomial_sum, BigInt(k));
  return c;
}

std::vector<BlowupFitRow> blowup_leading_fit(std::size_t k, std::size_t m, std::size_t t_min, std::size_t t_max,
                                             std::size_t workers) {
  if (t_min == 0 || t_min > t_max) throw std::invalid_argument("blob size range must satisfy 1 <= t_min <= t_max");
  if (m * t_max > kMaxVertices) throw std::invalid_argument("blow-up too large");
  std::vector<BlowupFitRow> rows;
  for (std::size_t t = t_min; t <= t_max; ++t) {
    const Graph g = blowup({cycle_graph(m), std::vector<std::size_t>(m, t)});
    BlowupFitRow row;
    row.t = t;
    row.exact_count = count_cycles(g, k, workers);
    row.ratio = Rational(row.exact_count, pow(BigInt(t), static_cast<unsigned>(k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ConjectureReport probe_conjecture1(std::size_t n, std::size_t k, std::size_t workers) {
  ConjectureReport r;
  r.conjecture = "1";
  r.n = n;
  r.k = k;
  r.search = exhaustive_search(n, k, ConstraintClass::triangle_free(), CountMode::Induced, workers);
  r.holds = r.search->within_bound;
  r.findings.push_back(bound_finding(*r.search, "induced C" + std::to_string(k) + " over triangle-free graphs"));
  return r;
}

ConjectureReport probe_observation(std::size_t n, std::size_t k, std::size_t workers) {
  ConjectureReport r;
  r.conjecture = "observation";
  r.n = n;
  r.k = k;
  r.search = exhaustive_search(n, k, ConstraintClass::observation(k), CountMode::Induced, workers);
  r.holds = r.search->within_bound;
  r.findings.push_back(bound_finding(*r.search, "induced C" + std::to_string(k) + " over the observation class"));
  return r;
}

ConjectureReport probe_conjecture2(std::size_t k, std::size_t l, std::size_t t_max, std::size_t workers) {
  ConjectureReport r;
  r.conjecture = "2";
  r.k = k;
  r.coefficient = conjecture2_coefficient(k, l);
  r.fit = blowup_leading_fit(k, l + 2, 1, t_max, workers);
  r.n = (l + 2) * t_max;
  const auto& c = *r.coefficient;
  r.findings.push_back("binomial-sum coefficient: " + to_string(c.binomial_sum));
  r.findings.push_back("closed-walk coefficient: " + to_string(c.walk_reference));
  if (Rational(c.binomial_sum) != c.walk_reference)
    r.findings.push_back("the two reference coefficients differ by the factor (l+2)/k = " +
                         to_string(Rational(l + 2, k)) + "; measured ratios are reported without choosing");
  for (const auto& row : r.fit)
    r.findings.push_back("t=" + std::to_string(row.t) + ": count " + to_string(row.exact_count) + ", count/t^k = " +
                         to_string(row.ratio));
  return r;
}

}  // namespace oddcycle
