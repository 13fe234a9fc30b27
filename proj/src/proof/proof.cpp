#include "oddcycle/proof.hpp"

#include <algorithm>

namespace oddcycle {
namespace {

void require_proof_length(std::size_t k) {
  if (k < 7 || k % 2 == 0)
    throw std::invalid_argument("weight machinery needs an odd cycle length >= 7, got " + std::to_string(k));
}

// Traversal order z_0 z_1 z_3 z_2 z_4 ... z_{last} used by the path sets.
std::vector<Vertex> traversal(const std::vector<Vertex>& z, std::size_t last) {
  std::vector<Vertex> p;
  for (std::size_t i = 0; i <= last; ++i) {
    std::size_t idx = i == 2 ? 3 : i == 3 ? 2 : i;
    p.push_back(z[idx]);
  }
  return p;
}

bool is_induced_path(const Graph& g, const std::vector<Vertex>& p) {
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (g.adjacent(p[a], p[b]) != (b == a + 1)) return false;
  return true;
}

// Vertices w extending the induced path p to an induced path (closing =
// false) or, also touching p.front(), to an induced cycle (closing = true).
VertexSet extensions(const Graph& g, const std::vector<Vertex>& p, bool closing) {
  if (!is_induced_path(g, p)) return {};
  VertexSet out = g.neighbors(p.back());
  if (closing) out &= g.neighbors(p.front());
  const std::size_t first_free = closing ? 1 : 0;
  for (std::size_t i = first_free; i + 1 < p.size(); ++i) out -= g.neighbors(p[i]);
  for (Vertex v : p) out.reset(v);
  return out;
}

VertexSet a_set(const Graph& g, const std::vector<Vertex>& z, std::size_t k, std::size_t i) {
  switch (i) {
    case 0:
      return g.vertices();
    case 1:
      return g.neighbors(z[0]);
    case 2:
      return second_neighborhood(g, z[1]) - g.neighbors(z[0]);
    case 3:
      return g.neighbors(z[1]) & g.neighbors(z[2]);
    default:
      return extensions(g, traversal(z, i - 1), i == k - 1);
  }
}

std::vector<ASetProfile> rotation_profiles(const Graph& g, const CycleInstance& c) {
  std::vector<ASetProfile> out;
  out.reserve(c.length());
  for (std::size_t j = 0; j < c.length(); ++j) out.push_back(a_sets(g, good_sequence(c, j)));
  return out;
}

void require_induced(const Graph& g, const CycleInstance& c) {
  require_proof_length(c.length());
  for (std::size_t a = 0; a < c.length(); ++a)
    for (std::size_t b = a + 2; b < c.length(); ++b) {
      if (a == 0 && b + 1 == c.length()) continue;
      if (g.adjacent(c.vertices[a], c.vertices[b]))
        throw std::invalid_argument("cycle has chord " + std::to_string(c.vertices[a]) + "-" +
                                    std::to_string(c.vertices[b]));
    }
}

std::size_t cycle_distance(std::size_t a, std::size_t b, std::size_t k) {
  const std::size_t d = a > b ? a - b : b - a;
  return std::min(d, k - d);
}

Rational class_bound(std::size_t cls, std::size_t k) {
  switch (cls) {
    case 0:
      return Rational(k - 2);
    case 1:
      return Rational(2 * k - 5, 2);
    default:
      return Rational(k - 1);
  }
}

VertexContribution contribution_from(const Graph& g, const CycleInstance& c, const std::vector<ASetProfile>& prof,
                                     Vertex w) {
  const std::size_t k = c.length();
  VertexContribution out;
  out.vertex = w;
  out.member.assign(k, std::vector<bool>(k, false));
  for (std::size_t i = 1; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (prof[j].sets[i].test(w)) {
        out.member[i][j] = true;
        out.twice_value += i == 1 ? 1 : 2;
      }
  out.value = Rational(out.twice_value, 2);

  std::vector<std::size_t> on_cycle;
  for (std::size_t p = 0; p < k; ++p)
    if (g.adjacent(w, c.vertices[p])) on_cycle.push_back(p);
  out.neighbor_class = on_cycle.size();
  out.neighbors_at_distance_two = on_cycle.size() == 2 && cycle_distance(on_cycle[0], on_cycle[1], k) == 2;
  if (out.neighbor_class >= 3) {
    out.precondition_violated = true;
    return out;
  }
  out.class_bound = class_bound(out.neighbor_class, k);
  out.within_bound = out.value <= *out.class_bound;
  return out;
}

Claim2Report claim2_from(const Graph& g, const CycleInstance& c, const std::vector<ASetProfile>& prof) {
  const std::size_t k = c.length();
  Claim2Report r;
  std::size_t twice_lhs = 0;
  for (std::size_t j = 0; j < k; ++j) {
    twice_lhs += prof[j].sizes[1];
    for (std::size_t i = 2; i < k; ++i) twice_lhs += 2 * prof[j].sizes[i];
  }
  r.lhs = Rational(twice_lhs, 2);
  r.rhs = BigInt(g.order()) * (k - 1);
  r.holds = r.lhs <= Rational(r.rhs);
  r.equality = r.lhs == Rational(r.rhs);

  std::size_t twice_sum = 0;
  r.equality_condition_holds = true;
  r.case_bounds_hold = true;
  for (Vertex w = 0; w < g.order(); ++w) {
    auto vc = contribution_from(g, c, prof, w);
    twice_sum += vc.twice_value;
    if (!vc.neighbors_at_distance_two) r.equality_condition_holds = false;
    if (!vc.within_bound) r.case_bounds_hold = false;
    r.per_vertex.push_back(std::move(vc));
  }
  r.ledger_identity = twice_sum == twice_lhs;
  return r;
}

SizeMatrix matrix_from(const std::vector<ASetProfile>& prof) {
  SizeMatrix m;
  m.k = prof.size();
  m.n.assign(m.k, std::vector<std::size_t>(m.k, 0));
  for (std::size_t j = 0; j < m.k; ++j)
    for (std::size_t i = 0; i < m.k; ++i) m.n[i][j] = prof[j].sizes[i];
  return m;
}

StarProperty star_from(const Graph& g, const CycleInstance& c, const VertexSet& dist2, Vertex w) {
  StarProperty s;
  for (Vertex u : c.vertices) {
    if (dist2.test(u)) s.at_distance_two.push_back(u);
    if (g.adjacent(w, u)) s.neighbors_on_cycle.push_back(u);
  }
  for (std::size_t a = 0; a < s.at_distance_two.size() && !s.adjacent_pair; ++a)
    for (std::size_t b = a + 1; b < s.at_distance_two.size(); ++b)
      if (g.adjacent(s.at_distance_two[a], s.at_distance_two[b])) {
        s.adjacent_pair = Edge{s.at_distance_two[a], s.at_distance_two[b]};
        break;
      }
  s.holds = s.at_distance_two.size() <= 3 && !s.adjacent_pair && s.neighbors_on_cycle.size() <= 2;
  return s;
}

}  // namespace

UndefinedWeight::UndefinedWeight(std::vector<Vertex> sequence, std::size_t index)
    : std::runtime_error("A_" + std::to_string(index) + " is empty for good sequence starting at vertex " +
                         (sequence.empty() ? std::string("?") : std::to_string(sequence.front()))),
      sequence_(std::move(sequence)),
      index_(index) {}

GoodSequence good_sequence(const CycleInstance& c, std::size_t start, bool reversed) {
  const std::size_t k = c.length();
  require_proof_length(k);
  GoodSequence d;
  d.start = start;
  d.reversed = reversed;
  d.z.resize(k);
  const auto step = reversed ? std::ptrdiff_t{-1} : std::ptrdiff_t{1};
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t src = i == 2 ? 3 : i == 3 ? 2 : i;
    d.z[i] = c.at(static_cast<std::ptrdiff_t>(start) + step * static_cast<std::ptrdiff_t>(src));
  }
  return d;
}

std::vector<GoodSequence> good_sequences(const CycleInstance& c) {
  require_proof_length(c.length());
  std::vector<GoodSequence> out;
  for (bool rev : {false, true})
    for (std::size_t j = 0; j < c.length(); ++j) out.push_back(good_sequence(c, j, rev));
  return out;
}

ASetProfile a_sets(const Graph& g, const std::vector<Vertex>& z, std::size_t k) {
  require_proof_length(k);
  for (std::size_t a = 0; a < z.size(); ++a) {
    if (z[a] >= g.order()) throw std::invalid_argument("vertex " + std::to_string(z[a]) + " out of range");
    for (std::size_t b = a + 1; b < z.size(); ++b)
      if (z[a] == z[b]) throw std::invalid_argument("repeated vertex " + std::to_string(z[a]) + " in sequence");
  }
  if (z.size() > k) throw std::invalid_argument("sequence longer than k");
  ASetProfile p;
  const std::size_t count = std::min(z.size() + 1, k);
  for (std::size_t i = 0; i < count; ++i) {
    p.sets.push_back(a_set(g, z, k, i));
    p.sizes.push_back(p.sets.back().count());
  }
  return p;
}

ASetProfile a_sets(const Graph& g, const GoodSequence& d) { return a_sets(g, d.z, d.length()); }

Rational weight(const Graph& g, const GoodSequence& d) {
  const auto p = a_sets(g, d);
  BigInt denom = 1;
  for (std::size_t i = 0; i < p.sizes.size(); ++i) {
    if (p.sizes[i] == 0) throw UndefinedWeight(d.z, i);
    denom *= p.sizes[i];
  }
  return Rational(BigInt(1), denom);
}

Claim1Report claim1_report(const Graph& g, std::size_t k, bool keep_per_cycle) {
  require_proof_length(k);
  Claim1Report r;
  r.k = k;
  r.precondition_met = odd_girth(g).at_least(k);
  enumerate_cycles(g, k, false, [&](const CycleInstance& c) {
    Rational sum = 0;
    for (const auto& d : good_sequences(c)) sum += weight(g, d);
    r.total += sum;
    ++r.cycles;
    if (keep_per_cycle) r.per_cycle.push_back({c, sum});
    return true;
  });
  r.holds = r.total <= 1;
  return r;
}

PrefixBound claim1_prefix_bound(const Graph& g, const std::vector<Vertex>& prefix, std::size_t k) {
  require_proof_length(k);
  if (prefix.size() > k) throw std::invalid_argument("prefix longer than k");
  PrefixBound b;
  b.rhs = 1;
  if (!prefix.empty()) {
    const auto prof = a_sets(g, prefix, k);
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prof.sizes[i] == 0)
        throw std::invalid_argument("prefix cannot be extended: A_" + std::to_string(i) + " is empty");
      b.rhs /= prof.sizes[i];
    }
  }
  b.lhs = 0;
  enumerate_cycles(g, k, false, [&](const CycleInstance& c) {
    for (const auto& d : good_sequences(c))
      if (std::equal(prefix.begin(), prefix.end(), d.z.begin())) b.lhs += weight(g, d);
    return true;
  });
  b.holds = b.lhs <= b.rhs;
  return b;
}

SizeMatrix size_matrix(const Graph& g, const CycleInstance& c) {
  require_induced(g, c);
  return matrix_from(rotation_profiles(g, c));
}

VertexContribution vertex_contribution(const Graph& g, const CycleInstance& c, Vertex w) {
  require_induced(g, c);
  if (w >= g.order()) throw std::invalid_argument("vertex " + std::to_string(w) + " out of range");
  return contribution_from(g, c, rotation_profiles(g, c), w);
}

StarProperty star_property(const Graph& g, const CycleInstance& c, Vertex w) {
  const auto dist = distances_from(g, w);
  VertexSet dist2;
  for (Vertex u = 0; u < g.order(); ++u)
    if (dist[u] == std::size_t{2}) dist2.set(u);
  return star_from(g, c, dist2, w);
}

Claim2Report claim2_report(const Graph& g, const CycleInstance& c) {
  require_induced(g, c);
  return claim2_from(g, c, rotation_profiles(g, c));
}

CycleBound cycle_bound(const SizeMatrix& m, std::size_t n, const Rational& claim2_lhs) {
  const std::size_t k = m.k;
  CycleBound b;
  std::vector<Rational> products(k);
  for (std::size_t j = 0; j < k; ++j) {
    Rational p = Rational(m.at(1, j), 2);
    for (std::size_t i = 2; i < k; ++i) p *= m.at(i, j);
    if (p == 0) throw std::invalid_argument("size matrix has a zero entry in column " + std::to_string(j));
    products[j] = p;
  }
  Rational inverse_sum = 0;
  Rational all = 1;
  for (const auto& p : products) {
    inverse_sum += 1 / p;
    all *= p;
  }
  const Rational n_over_k(n, k);
  b.expr1 = Rational(n) / inverse_sum;
  b.amgm1_kth_power = pow(n_over_k, static_cast<unsigned>(k)) * all;
  b.amgm2 = n_over_k * pow(claim2_lhs / (k * (k - 1)), static_cast<unsigned>(k - 1));
  b.final_bound = pow(n_over_k, static_cast<unsigned>(k));

  const Rational expr1_k = pow(b.expr1, static_cast<unsigned>(k));
  const Rational amgm2_k = pow(b.amgm2, static_cast<unsigned>(k));
  b.step1 = expr1_k <= b.amgm1_kth_power;
  b.step1_equal = expr1_k == b.amgm1_kth_power;
  b.step2 = b.amgm1_kth_power <= amgm2_k;
  b.step2_equal = b.amgm1_kth_power == amgm2_k;
  b.step3 = b.amgm2 <= b.final_bound;
  b.step3_equal = b.amgm2 == b.final_bound;
  b.chain_ok = b.step1 && b.step2 && b.step3;
  return b;
}

CycleBound cycle_bound(const Graph& g, const CycleInstance& c) {
  require_induced(g, c);
  const auto prof = rotation_profiles(g, c);
  return cycle_bound(matrix_from(prof), g.order(), claim2_from(g, c, prof).lhs);
}

TheoremReport verify_theorem(const Graph& g, std::size_t k, bool keep_per_cycle) {
  require_proof_length(k);
  TheoremReport r;
  r.n = g.order();
  r.k = k;
  r.girth = odd_girth(g);
  r.odd_girth_ok = r.girth.at_least(k);
  if (!r.odd_girth_ok)
    r.failures.push_back("precondition: odd girth " + r.girth.str() + " is below " + std::to_string(k));

  r.cycle_count = count_cycles(g, k);
  r.induced_cycle_count = count_induced_cycles(g, k);
  r.all_cycles_induced = r.cycle_count == r.induced_cycle_count;
  if (!r.all_cycles_induced) r.failures.push_back("some " + std::to_string(k) + "-cycle has a chord");

  try {
    r.claim1 = claim1_report(g, k);
    if (!r.claim1->holds) r.failures.push_back("weight sum exceeds 1: " + to_string(r.claim1->total));
  } catch (const UndefinedWeight& e) {
    r.claim1_error = e.what();
    r.failures.push_back(std::string("weight undefined: ") + e.what());
  }

  std::vector<VertexSet> dist2(g.order());
  for (Vertex v = 0; v < g.order(); ++v) dist2[v] = second_neighborhood(g, v);

  enumerate_cycles(g, k, true, [&](const CycleInstance& c) {
    const auto prof = rotation_profiles(g, c);
    auto claim2 = claim2_from(g, c, prof);
    auto bound = cycle_bound(matrix_from(prof), g.order(), claim2.lhs);
    ++r.cycles_checked;
    r.claim2_all_hold = r.claim2_all_hold && claim2.holds;
    r.claim2_identities_hold = r.claim2_identities_hold && claim2.ledger_identity;
    r.case_bounds_hold = r.case_bounds_hold && claim2.case_bounds_hold;
    r.chains_ok = r.chains_ok && bound.chain_ok;
    for (Vertex w = 0; w < g.order() && r.star_property_holds; ++w)
      r.star_property_holds = star_from(g, c, dist2[w], w).holds;
    if (keep_per_cycle) r.per_cycle.push_back({c, std::move(claim2), std::move(bound)});
    return true;
  });
  if (!r.claim2_all_hold) r.failures.push_back("contribution sum exceeds n(k-1) on some cycle");
  if (!r.claim2_identities_hold) r.failures.push_back("contribution ledger does not balance on some cycle");
  if (!r.case_bounds_hold) r.failures.push_back("a vertex exceeds its contribution case bound");
  if (!r.star_property_holds) r.failures.push_back("distance-two property fails for some vertex");
  if (!r.chains_ok) r.failures.push_back("bound chain broken on some cycle");

  const BigInt lhs = pow(BigInt(k), static_cast<unsigned>(k)) * r.cycle_count;
  const BigInt rhs = pow(BigInt(g.order()), static_cast<unsigned>(k));
  r.bound = Rational(rhs, pow(BigInt(k), static_cast<unsigned>(k)));
  r.bound_ok = lhs <= rhs;
  r.bound_equality = lhs == rhs && r.cycle_count > 0;
  if (!r.bound_ok) r.failures.push_back("cycle count exceeds (n/k)^k");

  r.blowup_blobs = recognize_cycle_blowup(g, k);
  if (r.blowup_blobs) {
    const auto [mn, mx] = std::minmax_element(r.blowup_blobs->begin(), r.blowup_blobs->end());
    r.balanced_blowup = *mx - *mn <= 1;
  }
  if (r.bound_equality && !r.balanced_blowup)
    r.failures.push_back("bound attained by a graph that is not a balanced blow-up of C" + std::to_string(k));

  r.passed = r.failures.empty();
  return r;
}

}  // namespace oddcycle
