#include "oddcycle/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oddcycle/conjecture.hpp"
#include "oddcycle/cycles.hpp"
#include "oddcycle/graph.hpp"
#include "oddcycle/graph6.hpp"
#include "oddcycle/proof.hpp"
#include "oddcycle/search.hpp"

namespace oddcycle::cli {
namespace {

using nlohmann::ordered_json;

struct RunConfig {
  bool json = false;
  bool strict = false;
  std::size_t workers = 1;
  std::string input;
  std::string format = "g6";

  std::size_t k = 0;
  std::size_t n = 0;
  bool induced = false;
  bool per_cycle = false;
  std::size_t cycle = 0;
  std::vector<std::size_t> blobs;
  std::size_t balanced = 0;
  std::string constraint = "odd-girth";
  std::size_t girth = 0;
  std::uint64_t seed = 1;
  std::uint64_t budget = 100000;
  std::size_t l = 0;
  std::size_t t_max = 4;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fnv1a(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string str(const Rational& r) { return to_string(r); }
std::string str(const BigInt& v) { return to_string(v); }

ordered_json vertices_json(const std::vector<Vertex>& vs) {
  ordered_json a = ordered_json::array();
  for (auto v : vs) a.push_back(v);
  return a;
}

std::string mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::Exhaustive:
      return "exhaustive";
    case SearchMode::HillClimb:
      return "hillclimb";
    case SearchMode::Filter:
      return "filter";
  }
  return "?";
}

ordered_json search_json(const SearchReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["constraint"] = r.constraint.name();
  j["count_mode"] = r.count_mode == CountMode::Induced ? "induced" : "plain";
  j["mode"] = mode_name(r.mode);
  j["best_count"] = str(r.best_count);
  j["bound_floor"] = str(r.bound_floor);
  j["within_bound"] = r.within_bound;
  j["reached_bound"] = r.reached_bound;
  j["theorem_applies"] = r.constraint.implies_odd_girth(r.k);
  j["extremal_graphs"] = r.extremal_graphs;
  j["graphs_examined"] = r.graphs_examined;
  if (r.seed) j["seed"] = *r.seed;
  if (r.budget) j["budget"] = *r.budget;
  return j;
}

ordered_json bound_json(const CycleBound& b) {
  ordered_json j;
  j["expr1"] = str(b.expr1);
  j["amgm1_kth_power"] = str(b.amgm1_kth_power);
  j["amgm2"] = str(b.amgm2);
  j["final"] = str(b.final_bound);
  j["steps"] = {b.step1, b.step2, b.step3};
  j["step_equalities"] = {b.step1_equal, b.step2_equal, b.step3_equal};
  j["chain_ok"] = b.chain_ok;
  return j;
}

ordered_json theorem_json(const TheoremReport& r) {
  ordered_json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["odd_girth"] = r.girth.str();
  j["odd_girth_ok"] = r.odd_girth_ok;
  j["cycle_count"] = str(r.cycle_count);
  j["induced_cycle_count"] = str(r.induced_cycle_count);
  j["all_cycles_induced"] = r.all_cycles_induced;
  if (r.claim1) {
    j["claim1"] = {{"total", str(r.claim1->total)},
                   {"holds", r.claim1->holds},
                   {"precondition_met", r.claim1->precondition_met},
                   {"cycles", r.claim1->cycles}};
  } else {
    j["claim1"] = {{"error", r.claim1_error.value_or("")}};
  }
  j["cycles_checked"] = r.cycles_checked;
  j["claim2_all_hold"] = r.claim2_all_hold;
  j["claim2_identities_hold"] = r.claim2_identities_hold;
  j["case_bounds_hold"] = r.case_bounds_hold;
  j["star_property_holds"] = r.star_property_holds;
  j["chains_ok"] = r.chains_ok;
  j["bound"] = str(r.bound);
  j["bound_ok"] = r.bound_ok;
  j["bound_equality"] = r.bound_equality;
  if (r.blowup_blobs)
    j["blowup_blobs"] = *r.blowup_blobs;
  else
    j["blowup_blobs"] = nullptr;
  j["balanced_blowup"] = r.balanced_blowup;
  j["passed"] = r.passed;
  j["failures"] = r.failures;
  if (!r.per_cycle.empty()) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : r.per_cycle) {
      ordered_json e;
      e["cycle"] = vertices_json(c.cycle.vertices);
      e["claim2"] = {{"lhs", str(c.claim2.lhs)},
                     {"rhs", str(c.claim2.rhs)},
                     {"holds", c.claim2.holds},
                     {"equality", c.claim2.equality},
                     {"equality_condition_holds", c.claim2.equality_condition_holds},
                     {"ledger_identity", c.claim2.ledger_identity},
                     {"case_bounds_hold", c.claim2.case_bounds_hold}};
      e["bound_chain"] = bound_json(c.bound);
      arr.push_back(std::move(e));
    }
    j["per_cycle"] = std::move(arr);
  }
  return j;
}

ordered_json conjecture_json(const ConjectureReport& r) {
  ordered_json j;
  j["conjecture"] = r.conjecture;
  j["n"] = r.n;
  j["k"] = r.k;
  if (r.search) j["search"] = search_json(*r.search);
  if (r.coefficient) {
    j["l"] = r.coefficient->l;
    j["binomial_sum"] = str(r.coefficient->binomial_sum);
    j["walk_reference"] = str(r.coefficient->walk_reference);
  }
  if (!r.fit.empty()) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.fit) rows.push_back({{"t", row.t}, {"exact_count", str(row.exact_count)}, {"ratio", str(row.ratio)}});
    j["fit"] = std::move(rows);
  }
  j["holds"] = r.holds;
  j["findings"] = r.findings;
  return j;
}

std::string read_all(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<Graph> parse_graphs(const std::string& text, const std::string& format) {
  std::istringstream is(text);
  if (format == "g6") return read_graph6_stream(is);
  if (format == "edges") {
    std::vector<Graph> out;
    while (is >> std::ws && is.peek() != std::char_traits<char>::eof()) out.push_back(parse_edge_list(is));
    return out;
  }
  throw UsageError("unknown format '" + format + "' (expected g6 or edges)");
}

ConstraintClass parse_constraint(const RunConfig& cfg) {
  if (cfg.constraint == "odd-girth") return ConstraintClass::odd_girth_at_least(cfg.girth ? cfg.girth : cfg.k);
  if (cfg.constraint == "triangle-free") return ConstraintClass::triangle_free();
  if (cfg.constraint == "observation") return ConstraintClass::observation(cfg.k);
  if (cfg.constraint == "none") return ConstraintClass::unconstrained();
  throw UsageError("unknown constraint '" + cfg.constraint + "'");
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::string subcommand, std::string params, std::istream& in, std::ostream& out,
         std::ostream& err)
      : cfg_(cfg), subcommand_(std::move(subcommand)), params_(std::move(params)), in_(in), out_(out), err_(err) {}

  int dispatch() {
    if (subcommand_ == "count") return count();
    if (subcommand_ == "odd-girth") return girth();
    if (subcommand_ == "blowup") return make_blowup();
    if (subcommand_ == "verify") return verify();
    if (subcommand_ == "search exhaustive") return search_exhaustive();
    if (subcommand_ == "search hillclimb") return search_hillclimb();
    if (subcommand_ == "search filter") return search_filter();
    if (subcommand_ == "conjecture 1") return conjecture(probe_conjecture1(cfg_.n, cfg_.k, cfg_.workers));
    if (subcommand_ == "conjecture observation")
      return conjecture(probe_observation(cfg_.n, cfg_.k, cfg_.workers));
    if (subcommand_ == "conjecture 2") return conjecture(probe_conjecture2(cfg_.k, cfg_.l, cfg_.t_max, cfg_.workers));
    throw UsageError("no subcommand given");
  }

 private:
  std::vector<Graph> load_graphs() {
    if (cfg_.input.empty()) {
      input_text_ = read_all(in_);
    } else {
      std::ifstream f(cfg_.input, std::ios::binary);
      if (!f) throw UsageError("cannot open input file '" + cfg_.input + "'");
      input_text_ = read_all(f);
    }
    return parse_graphs(input_text_, cfg_.format);
  }

  void emit(ordered_json results, const std::string& human) {
    if (cfg_.json) {
      ordered_json doc;
      doc["tool"] = kToolName;
      doc["version"] = kToolVersion;
      doc["subcommand"] = subcommand_;
      doc["inputs_digest"] = fnv1a(params_ + "\n" + input_text_);
      doc["results"] = std::move(results);
      out_ << doc.dump(2) << '\n';
    } else {
      out_ << human;
    }
  }

  int count() {
    const auto graphs = load_graphs();
    ordered_json res = ordered_json::array();
    std::ostringstream human;
    for (const auto& g : graphs) {
      const BigInt c = cfg_.induced ? count_induced_cycles(g, cfg_.k, cfg_.workers) : count_cycles(g, cfg_.k, cfg_.workers);
      res.push_back({{"n", g.order()}, {"k", cfg_.k}, {"induced", cfg_.induced}, {"count", str(c)}});
      human << c << '\n';
    }
    emit(std::move(res), human.str());
    return kOk;
  }

  int girth() {
    const auto graphs = load_graphs();
    ordered_json res = ordered_json::array();
    std::ostringstream human;
    for (const auto& g : graphs) {
      const auto og = odd_girth(g);
      res.push_back({{"n", g.order()}, {"odd_girth", og.str()}});
      human << og.str() << '\n';
    }
    emit(std::move(res), human.str());
    return kOk;
  }

  int make_blowup() {
    if (cfg_.cycle < 3) throw UsageError("--cycle must be at least 3");
    if (cfg_.blobs.empty() && cfg_.balanced == 0) throw UsageError("blowup needs --blobs or --balanced");
    std::vector<std::size_t> blobs = cfg_.blobs;
    if (blobs.empty()) blobs = balanced_blobs(cfg_.balanced, cfg_.cycle);
    const Graph g = blowup({cycle_graph(cfg_.cycle), blobs});
    const std::string g6 = write_graph6(g);
    ordered_json res = {{"n", g.order()}, {"edges", g.size()}, {"blobs", blobs}, {"graph6", g6}};
    emit(std::move(res), g6 + "\n");
    return kOk;
  }

  int verify() {
    const auto graphs = load_graphs();
    ordered_json res = ordered_json::array();
    std::ostringstream human;
    bool all_passed = true;
    for (const auto& g : graphs) {
      const auto r = verify_theorem(g, cfg_.k, cfg_.per_cycle);
      all_passed = all_passed && r.passed;
      res.push_back(theorem_json(r));
      human << "n=" << r.n << " k=" << r.k << " odd_girth=" << r.girth.str() << " cycles=" << r.cycle_count
            << " weight_sum=" << (r.claim1 ? str(r.claim1->total) : std::string("undefined"))
            << " bound=" << str(r.bound) << (r.balanced_blowup ? " balanced-blowup" : "") << " => "
            << (r.passed ? "PASS" : "FAIL") << '\n';
      for (const auto& f : r.failures) human << "  " << f << '\n';
    }
    for (const auto& r : res)
      for (const auto& f : r["failures"]) err_ << "verify: " << f.get<std::string>() << '\n';
    emit(std::move(res), human.str());
    return all_passed ? kOk : kViolation;
  }

  int report_search(const SearchReport& r) {
    std::ostringstream human;
    human << "n=" << r.n << " k=" << r.k << " " << r.constraint.name() << " ("
          << (r.count_mode == CountMode::Induced ? "induced" : "plain") << ", " << mode_name(r.mode) << ")\n"
          << "best " << r.best_count << ", floor((n/k)^k) = " << r.bound_floor << ", examined " << r.graphs_examined
          << '\n';
    for (const auto& g6 : r.extremal_graphs) human << "  " << g6 << '\n';
    emit(search_json(r), human.str());
    const bool theorem_violated = r.constraint.implies_odd_girth(r.k) && !r.within_bound;
    if (theorem_violated) return kViolation;
    if (cfg_.strict && !r.within_bound) return kViolation;
    return kOk;
  }

  int search_exhaustive() {
    return report_search(exhaustive_search(cfg_.n, cfg_.k, parse_constraint(cfg_),
                                           cfg_.induced ? CountMode::Induced : CountMode::Plain, cfg_.workers));
  }

  int search_hillclimb() {
    HillClimbOptions o;
    o.seed = cfg_.seed;
    o.budget = cfg_.budget;
    o.workers = cfg_.workers;
    o.count_mode = cfg_.induced ? CountMode::Induced : CountMode::Plain;
    return report_search(hill_climb(cfg_.n, cfg_.k, parse_constraint(cfg_), o));
  }

  int search_filter() {
    const auto constraint = parse_constraint(cfg_);
    const auto graphs = filter_constrained(load_graphs(), constraint);
    std::size_t n = cfg_.n;
    for (const auto& g : graphs) n = std::max(n, g.order());
    return report_search(
        search_graphs(graphs, n, cfg_.k, constraint, cfg_.induced ? CountMode::Induced : CountMode::Plain));
  }

  int conjecture(const ConjectureReport& r) {
    std::ostringstream human;
    human << "conjecture " << r.conjecture << '\n';
    for (const auto& f : r.findings) human << "  " << f << '\n';
    emit(conjecture_json(r), human.str());
    return cfg_.strict && !r.holds ? kViolation : kOk;
  }

  const RunConfig& cfg_;
  std::string subcommand_;
  std::string params_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::string input_text_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Cycle counting and extremal checks for graphs without short odd cycles", kToolName};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", cfg.json, "Emit one JSON document");
  app.add_flag("--strict", cfg.strict, "Exit 1 when a probe reports a finding");
  app.add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--input", cfg.input, "Read graphs from FILE instead of standard input");
  app.add_option("--format", cfg.format, "Input format")->check(CLI::IsMember({"g6", "edges"}));

  auto* count = app.add_subcommand("count", "Count k-cycles of each input graph");
  count->add_option("--k", cfg.k, "Cycle length")->required()->check(CLI::Range(3, 64));
  count->add_flag("--induced", cfg.induced, "Count chordless cycles only");

  app.add_subcommand("odd-girth", "Shortest odd cycle of each input graph (inf if bipartite)");

  auto* blow = app.add_subcommand("blowup", "Emit a blow-up of a cycle as graph6");
  blow->add_option("--cycle", cfg.cycle, "Length of the blown-up cycle")->required();
  auto* blobs = blow->add_option("--blobs", cfg.blobs, "Blob sizes")->delimiter(',');
  auto* bal = blow->add_option("--balanced", cfg.balanced, "Total vertex count of a balanced blow-up");
  blobs->excludes(bal);
  bal->excludes(blobs);

  auto* verify = app.add_subcommand("verify", "Check every step of the weight argument on each input graph");
  verify->add_option("--k", cfg.k, "Odd cycle length >= 7")->required();
  verify->add_flag("--per-cycle", cfg.per_cycle, "Include per-cycle ledgers");

  auto* search = app.add_subcommand("search", "Search for extremal graphs");
  search->require_subcommand(1);
  auto add_search_opts = [&](CLI::App* s, bool needs_n) {
    auto* n_opt = s->add_option("--n", cfg.n, "Vertex count");
    if (needs_n) n_opt->required();
    s->add_option("--k", cfg.k, "Cycle length")->required()->check(CLI::Range(3, 64));
    s->add_option("--constraint", cfg.constraint, "odd-girth | triangle-free | observation | none")
        ->check(CLI::IsMember({"odd-girth", "triangle-free", "observation", "none"}));
    s->add_option("--girth", cfg.girth, "Odd-girth threshold (defaults to k)");
    s->add_flag("--induced", cfg.induced, "Count chordless cycles only");
  };
  auto* exh = search->add_subcommand("exhaustive", "Enumerate every class member up to isomorphism");
  add_search_opts(exh, true);
  auto* hc = search->add_subcommand("hillclimb", "Seeded local search over edge toggles");
  add_search_opts(hc, true);
  hc->add_option("--seed", cfg.seed, "RNG seed");
  hc->add_option("--budget", cfg.budget, "Number of edge toggles");
  auto* filt = search->add_subcommand("filter", "Search a graph6 stream read from the input");
  add_search_opts(filt, false);

  auto* conj = app.add_subcommand("conjecture", "Desk-scale conjecture probes");
  conj->require_subcommand(1);
  auto* c1 = conj->add_subcommand("1", "Induced C_k in triangle-free graphs");
  c1->add_option("--n", cfg.n, "Vertex count")->required();
  c1->add_option("--k", cfg.k, "Cycle length")->required()->check(CLI::Range(3, 64));
  auto* c2 = conj->add_subcommand("2", "Blow-up coefficient comparison");
  c2->add_option("--k", cfg.k, "Odd cycle length")->required();
  c2->add_option("--l", cfg.l, "Forbidden odd length")->required();
  c2->add_option("--t-max", cfg.t_max, "Largest blob size");
  auto* obs = conj->add_subcommand("observation", "Induced C_k over the even-k class");
  obs->add_option("--n", cfg.n, "Vertex count")->required();
  obs->add_option("--k", cfg.k, "Even cycle length >= 8")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsageError;
  }

  std::string subcommand;
  for (const CLI::App* s = &app; !s->get_subcommands().empty();) {
    s = s->get_subcommands().front();
    subcommand += (subcommand.empty() ? "" : " ") + s->get_name();
  }

  std::string params = subcommand;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--workers") {
      ++i;
      continue;
    }
    if (args[i].starts_with("--workers=")) continue;
    params += " " + args[i];
  }

  try {
    Runner runner(cfg, subcommand, params, in, out, err);
    return runner.dispatch();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const FormatError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const GraphError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageError;
}

}  // namespace oddcycle::cli
