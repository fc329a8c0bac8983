#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "p6/chordal.hpp"
#include "p6/eds.hpp"
#include "p6/errors.hpp"
#include "p6/gen.hpp"
#include "p6/io.hpp"
#include "p6/mwis.hpp"
#include "p6/nuke.hpp"
#include "p6/oracle.hpp"
#include "p6/pattern.hpp"
#include "p6/verify.hpp"

namespace {

using namespace p6;

int run_solve_mwis(const std::string& file, const std::string& mode, long long budget, bool json) {
  WeightedGraph gw = read_instance_file(file);
  SolverConfig cfg;
  cfg.mode = mode == "strict" ? SolveMode::strict : SolveMode::robust;
  if (budget > 0) cfg.node_budget = budget;
  auto [sol, stats] = solve_mwis(gw, cfg);
  if (!is_independent_set(gw.graph, sol.chosen) || weight_of(gw, sol.chosen) != sol.weight)
    throw StructureViolation("emitted mwis solution failed verification");
  ResultRecord r = make_result("mwis", sol, stats);
  std::cout << (json ? r.to_json() + "\n" : r.to_text());
  return 0;
}

int run_solve_eds(const std::string& file, const std::string& mode, long long budget, bool json) {
  WeightedGraph gw = read_instance_file(file);
  EdsConfig cfg;
  cfg.mode = mode == "fallback" ? EdsMode::fallback : EdsMode::strict;
  if (budget > 0) cfg.node_budget = budget;
  EdsResult res = solve_eds(gw, cfg);
  if (res.solution) {
    if (!is_efficient_dominating_set(gw.graph, res.solution->chosen) ||
        weight_of(gw, res.solution->chosen) != res.solution->weight)
      throw StructureViolation("emitted eds solution failed verification");
  }
  ResultRecord r = make_result("eds", res.solution, res.stats);
  std::cout << (json ? r.to_json() + "\n" : r.to_text());
  return 0;
}

int run_check(const std::string& file, int k) {
  WeightedGraph gw = read_instance_file(file);
  auto witness = find_induced_path(gw.graph, k);
  if (!witness) {
    std::cout << "pkfree k=" << k << "\n";
    return 0;
  }
  std::cout << "witness";
  for (int v : *witness) std::cout << " " << v + 1;
  std::cout << "\n";
  return 1;
}

int run_triangulate(const std::string& file) {
  WeightedGraph gw = read_instance_file(file);
  const Graph& g = gw.graph;
  Triangulation tri = minimal_triangulation_within(g, g.vertices());
  CliqueTree tree = clique_tree_within(g, g.vertices(), tri);
  for (auto [u, v] : tri.fill) std::cout << "fill " << u + 1 << " " << v + 1 << "\n";
  for (size_t i = 0; i < tree.bags.size(); i++) {
    std::cout << "bag " << i << ":";
    for (int v : tree.bags[i]) std::cout << " " << v + 1;
    std::cout << "\n";
  }
  for (auto [a, b] : tree.tree_edges) std::cout << "tree " << a << " " << b << "\n";
  if (!tree.bags.empty()) std::cout << "central " << central_bag_within(g, g.vertices(), tree) << "\n";
  return 0;
}

int run_gen(const std::string& family, int n, int k, const std::string& prob, int forbid, uint64_t seed,
            long long wmin, long long wmax, int max_repair, const std::string& out_path) {
  Graph g;
  if (family == "random-pkfree") {
    // probability given as "num/den" or a percent-free decimal like 0.3
    Rational p(3, 10);
    if (!prob.empty()) {
      auto slash = prob.find('/');
      if (slash != std::string::npos) {
        p = Rational(std::stoll(prob.substr(0, slash)), std::stoll(prob.substr(slash + 1)));
      } else {
        double d = std::stod(prob);
        p = Rational(static_cast<long long>(d * 1000), 1000);
      }
    }
    g = gen_random_pkfree(n, p, forbid, seed, max_repair > 0 ? max_repair : 10 * n);
  } else if (family == "cograph") {
    g = gen_cograph(n, seed);
  } else if (family == "nuke-counterexample") {
    auto inst = gen_counterexample_nuke(k);
    g = inst.graph;
    std::cerr << "c nuke tau=" << inst.tau << "\n";
  } else if (family == "separator-counterexample") {
    g = gen_counterexample_separator(k).graph;
  } else {
    throw ParseError("unknown family: " + family);
  }
  WeightedGraph gw = assign_weights(g, wmin, wmax, seed ^ 0x9e3779b97f4a7c15ull);
  std::string text = write_instance(gw);
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    out << text;
  }
  return 0;
}

int run_verify(const std::string& theorem, const std::string& file, int k_nuke, int k_sep, long long pattern_budget) {
  if (theorem == "counterexamples") {
    CounterexampleReport rep = check_counterexamples(k_nuke, k_sep, pattern_budget);
    std::cout << "counterexamples k_nuke=" << rep.k_nuke << " k_sep=" << rep.k_sep << " tau=" << rep.tau << "\n";
    for (const auto& c : rep.claims) {
      std::cout << "claim " << c.name << " " << (c.checked ? (c.ok ? "ok" : "FAIL") : "skipped") << " " << c.detail
                << "\n";
    }
    return rep.all_ok() ? 0 : 4;
  }
  WeightedGraph gw = read_instance_file(file);
  const Graph& g = gw.graph;
  bool all_ok = true;
  if (theorem == "hit-sep") {
    for (const VertexSet& s : oracle::minimal_separators_bruteforce(g)) {
      if (s.empty()) continue;
      HitReport r = verify_hit_sep(g, s, Measure::uniform(s));
      std::cout << r.line("hit-sep") << "\n";
      all_ok &= r.satisfied;
    }
  } else if (theorem == "hit-pmc") {
    for (const VertexSet& omega : oracle::pmcs_bruteforce(g)) {
      HitReport r = verify_hit_pmc(g, omega, Measure::uniform(omega));
      std::cout << r.line("hit-pmc") << "\n";
      all_ok &= r.satisfied;
    }
  } else if (theorem == "hit-nuke") {
    // seed a nuke exactly as the solver would: central bag of a minimal
    // triangulation with tau = ceil(0.8 n)
    Triangulation tri = minimal_triangulation_within(g, g.vertices());
    CliqueTree tree = clique_tree_within(g, g.vertices(), tri);
    int bag = central_bag_within(g, g.vertices(), tree);
    long long tau = ceil_mul(Rational(4, 5), g.n());
    NukeParams p{Rational(1, 10), tau};
    if (!is_nuke(g, tree.bags[bag], p)) {
      std::cout << "hit-nuke no-nuke (central bag fails the nuke conditions)\n";
      return 0;
    }
    VertexSet y = minimize_nuke(g, tree.bags[bag], p);
    HitReport r = verify_hit_nuke(g, y, p, Measure::uniform(y));
    std::cout << r.line("hit-nuke") << "\n";
    all_ok = r.satisfied;
  } else {
    throw ParseError("unknown theorem: " + theorem);
  }
  return all_ok ? 0 : 4;
}

int run_oracle(const std::string& what, const std::string& file) {
  WeightedGraph gw = read_instance_file(file);
  if (what == "mwis") {
    Solution s = oracle::mwis_bruteforce(gw);
    std::cout << "weight " << s.weight << "\nsolution";
    for (int v : s.chosen) std::cout << " " << v + 1;
    std::cout << "\n";
  } else if (what == "eds") {
    auto ref = oracle::eds_bruteforce(gw);
    if (!ref.best) {
      std::cout << "status no-solution\n";
    } else {
      std::cout << "status optimal\nweight " << ref.best->weight << "\ncardinality " << ref.cardinality
                << "\nsolution";
      for (int v : ref.best->chosen) std::cout << " " << v + 1;
      std::cout << "\n";
    }
  } else if (what == "seps") {
    for (const VertexSet& s : oracle::minimal_separators_bruteforce(gw.graph)) {
      std::cout << "sep";
      for (int v : s) std::cout << " " << v + 1;
      std::cout << "\n";
    }
  } else if (what == "pmcs") {
    for (const VertexSet& s : oracle::pmcs_bruteforce(gw.graph)) {
      std::cout << "pmc";
      for (int v : s) std::cout << " " << v + 1;
      std::cout << "\n";
    }
  } else {
    throw ParseError("unknown oracle: " + what);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvers and structural checks for Pk-free graph instances"};
  app.require_subcommand(1);

  std::string file, mode = "robust", family, prob, out_path, theorem, what;
  long long budget = 0, wmin = 1, wmax = 1, pattern_budget = p6::kDefaultPatternBudget;
  int forbid = 6, n = 10, k = 3, k_nuke = 4, k_sep = 3, max_repair = 0;
  uint64_t seed = 1;
  bool json = false;

  auto* s_mwis = app.add_subcommand("solve-mwis", "maximum weight independent set");
  s_mwis->add_option("file", file)->required();
  s_mwis->add_option("--mode", mode)->check(CLI::IsMember({"robust", "strict"}));
  s_mwis->add_option("--budget", budget);
  s_mwis->add_flag("--json", json);

  auto* s_eds = app.add_subcommand("solve-eds", "maximum weight efficient dominating set");
  s_eds->add_option("file", file)->required();
  s_eds->add_option("--mode", mode)->check(CLI::IsMember({"strict", "fallback"}));
  s_eds->add_option("--budget", budget);
  s_eds->add_flag("--json", json);

  auto* s_check = app.add_subcommand("check", "test P_k-freeness");
  s_check->add_option("file", file)->required();
  s_check->add_option("--forbid", forbid)->required();

  auto* s_tri = app.add_subcommand("triangulate", "minimal triangulation, bags, central bag");
  s_tri->add_option("file", file)->required();

  auto* s_gen = app.add_subcommand("gen", "generate an instance");
  s_gen->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"random-pkfree", "cograph", "nuke-counterexample", "separator-counterexample"}));
  s_gen->add_option("--n", n);
  s_gen->add_option("--k", k);
  s_gen->add_option("--p", prob);
  s_gen->add_option("--forbid", forbid);
  s_gen->add_option("--seed", seed);
  s_gen->add_option("--wmin", wmin);
  s_gen->add_option("--wmax", wmax);
  s_gen->add_option("--max-repair", max_repair);
  s_gen->add_option("-o,--out", out_path);

  auto* s_verify = app.add_subcommand("verify", "hitting-theorem and counterexample checks");
  s_verify->add_option("--theorem", theorem)
      ->required()
      ->check(CLI::IsMember({"hit-sep", "hit-pmc", "hit-nuke", "counterexamples"}));
  s_verify->add_option("file", file);
  s_verify->add_option("--k-nuke", k_nuke);
  s_verify->add_option("--k-sep", k_sep);
  s_verify->add_option("--pattern-budget", pattern_budget);

  auto* s_oracle = app.add_subcommand("oracle", "brute-force reference outputs");
  s_oracle->add_option("what", what)->required()->check(CLI::IsMember({"mwis", "eds", "seps", "pmcs"}));
  s_oracle->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (s_mwis->parsed()) return run_solve_mwis(file, mode, budget, json);
    if (s_eds->parsed()) return run_solve_eds(file, mode == "robust" ? "strict" : mode, budget, json);
    if (s_check->parsed()) return run_check(file, forbid);
    if (s_tri->parsed()) return run_triangulate(file);
    if (s_gen->parsed()) return run_gen(family, n, k, prob, forbid, seed, wmin, wmax, max_repair, out_path);
    if (s_verify->parsed()) return run_verify(theorem, file, k_nuke, k_sep, pattern_budget);
    if (s_oracle->parsed()) return run_oracle(what, file);
  } catch (const p6::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const p6::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const p6::StructureViolation& e) {
    std::cerr << e.what() << "\n";
    return 4;
  } catch (const p6::GenerationFailed& e) {
    std::cerr << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
