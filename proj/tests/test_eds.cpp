#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "p6/eds.hpp"
#include "p6/errors.hpp"
#include "p6/oracle.hpp"

using namespace p6;

TEST_CASE("solve_eds examples") {
  WeightedGraph p4(path_graph(4), {5, 1, 1, 5});
  EdsResult r = solve_eds(p4);
  REQUIRE(r.solution.has_value());
  CHECK(r.solution->weight == 10);
  CHECK(r.solution->chosen == VertexSet::of(4, {0, 3}));

  CHECK_FALSE(solve_eds(WeightedGraph::unit(cycle_graph(4))).solution.has_value());

  WeightedGraph k3(complete_graph(3), {-2, -5, 1});
  EdsResult rk = solve_eds(k3);
  REQUIRE(rk.solution.has_value());
  CHECK(rk.solution->weight == 1);
  CHECK(rk.solution->chosen == VertexSet::of(3, {2}));

  // empty graph has the empty efficient dominating set
  EdsResult re = solve_eds(WeightedGraph::unit(Graph(0)));
  REQUIRE(re.solution.has_value());
  CHECK(re.solution->weight == 0);

  WeightedGraph neg(Graph(1), {-3});
  EdsResult rn = solve_eds(neg);
  REQUIRE(rn.solution.has_value());
  CHECK(rn.solution->weight == -3);
}

TEST_CASE("enumerate_states on K_n: one BOT, rest OMEGA") {
  Graph k4 = complete_graph(4);
  StateFamily fam = enumerate_states(k4, k4.vertices());
  CHECK(fam.states.size() == 4);
  for (const State& f : fam.states) {
    int bots = 0;
    for (int code : f.assign) {
      if (code == kBot) {
        bots++;
      } else {
        CHECK(code == kOmega);
      }
    }
    CHECK(bots == 1);
  }
}

TEST_CASE("enumerate_states on P4 covers the unique eds") {
  Graph p4 = path_graph(4);
  StateFamily fam = enumerate_states(p4, VertexSet::of(4, {1, 2}));
  VertexSet eds = VertexSet::of(4, {0, 3});
  bool covered = false;
  for (const State& f : fam.states) covered |= state_consistent(f, fam.ctx, eds, p4);
  CHECK(covered);
}

TEST_CASE("enumerate_states requires a pmc") {
  Graph c4 = cycle_graph(4);
  CHECK_THROWS_AS(enumerate_states(c4, VertexSet::of(4, {0, 2})), PreconditionViolation);
}

TEST_CASE("state_consistent examples") {
  Graph k3 = complete_graph(3);
  BagContext ctx = make_bag_context(k3, k3.vertices());
  State f{{kBot, kOmega, kOmega}};
  CHECK(state_consistent(f, ctx, VertexSet::of(3, {0}), k3));
  State g{{kBot, kBot, kOmega}};
  CHECK_FALSE(state_consistent(g, ctx, VertexSet::of(3, {0}), k3));

  Graph p4 = path_graph(4);
  BagContext cp = make_bag_context(p4, VertexSet::of(4, {1, 2}));
  // components of P4 - {v2,v3}: {v1} is component 0, {v4} is component 1
  State h{{0, 1}};
  CHECK(state_consistent(h, cp, VertexSet::of(4, {0, 3}), p4));
  State h2{{1, 1}};
  CHECK_FALSE(state_consistent(h2, cp, VertexSet::of(4, {0, 3}), p4));
}

TEST_CASE("coverage: every efficient dominating set has a consistent state") {
  auto corpus = test::pkfree_corpus(50, 6, 2, 12, 1, 1, 606060);
  int covered_pairs = 0;
  for (const auto& gw : corpus) {
    const Graph& g = gw.graph;
    auto all = oracle::eds_enumerate(g);
    if (all.empty()) continue;
    Triangulation tri = minimal_triangulation_within(g, g.vertices());
    CliqueTree tree = clique_tree_within(g, g.vertices(), tri);
    for (const VertexSet& bag : tree.bags) {
      StateFamily fam = enumerate_states(g, bag);
      for (const VertexSet& x : all) {
        bool found = false;
        for (const State& f : fam.states) {
          if (state_consistent(f, fam.ctx, x, g)) {
            found = true;
            break;
          }
        }
        CHECK(found);
        covered_pairs++;
      }
    }
  }
  CHECK(covered_pairs > 100);
}

TEST_CASE("is_partial_solution examples") {
  Graph p4 = path_graph(4);
  VertexSet bag = VertexSet::of(4, {1, 2});
  // leaf-style node: cone equals bag
  CHECK(is_partial_solution(p4, bag, bag, VertexSet(4)));
  // two adjacent chosen vertices fail
  VertexSet gamma = VertexSet::full(4);
  CHECK_FALSE(is_partial_solution(p4, gamma, bag, VertexSet::of(4, {0, 1})));
  // for an efficient dominating set X, X /\ gamma(t) is a partial solution
  for (uint64_t seed = 0; seed < 25; seed++) {
    Graph g = test::random_graph(4 + seed % 8, 1, 3, seed * 9 + 2);
    auto all = oracle::eds_enumerate(g);
    if (all.empty()) continue;
    Triangulation tri = minimal_triangulation_within(g, g.vertices());
    CliqueTree tree = clique_tree_within(g, g.vertices(), tri);
    // cone of the whole tree at the root is V
    for (const VertexSet& x : all) {
      CHECK(is_partial_solution(g, g.vertices(), tree.bags[0], x));
    }
  }
}

TEST_CASE("partially_consistent example: P4 child bag under root bag") {
  Graph p4 = path_graph(4);
  VertexSet beta_t = VertexSet::of(4, {1, 2});
  VertexSet beta_c = VertexSet::of(4, {0, 1});
  VertexSet gamma_c = beta_c;
  BagContext ctx = make_bag_context(p4, beta_t);
  State f{{0, 1}};  // v2 -> component {v1}, v3 -> component {v4}
  VertexSet yp = VertexSet::of(4, {0});
  CHECK(partially_consistent(p4, ctx, f, beta_t, beta_c, gamma_c, yp));

  // a shared-bag vertex not marked BOT fails
  VertexSet yp_bad = VertexSet::of(4, {1});
  CHECK_FALSE(partially_consistent(p4, ctx, f, beta_t, beta_c, gamma_c, yp_bad));

  // empty child cone with assignments pointing away passes
  CHECK(partially_consistent(p4, ctx, f, beta_t, VertexSet(4), VertexSet(4), VertexSet(4)));
}

TEST_CASE("oracle equivalence on a P6-free corpus with negative weights") {
  auto corpus = test::pkfree_corpus(120, 6, 1, 13, -50, 50, 121212);
  for (const auto& gw : corpus) {
    EdsResult r = solve_eds(gw);  // strict mode
    auto ref = oracle::eds_bruteforce(gw);
    CHECK(r.solution.has_value() == ref.best.has_value());
    if (r.solution) {
      CHECK(r.solution->weight == ref.best->weight);
      CHECK(is_efficient_dominating_set(gw.graph, r.solution->chosen));
      CHECK(weight_of(gw, r.solution->chosen) == r.solution->weight);
      CHECK(r.solution->chosen.count() == ref.best->chosen.count());  // common cardinality
    }
  }
}

TEST_CASE("fallback mode matches the oracle on arbitrary graphs") {
  for (uint64_t seed = 0; seed < 80; seed++) {
    int n = 1 + seed % 13;
    Graph g = test::random_graph(n, 1 + seed % 4, 5, seed * 71 + 23);
    WeightedGraph gw = assign_weights(g, -20, 20, seed + 9);
    EdsConfig cfg;
    cfg.mode = EdsMode::fallback;
    EdsResult r = solve_eds(gw, cfg);
    auto ref = oracle::eds_bruteforce(gw);
    CHECK(r.solution.has_value() == ref.best.has_value());
    if (r.solution) CHECK(r.solution->weight == ref.best->weight);
  }
}

TEST_CASE("strict mode on arbitrary graphs: correct answer or structure violation") {
  int violations = 0;
  for (uint64_t seed = 0; seed < 60; seed++) {
    int n = 2 + seed % 12;
    Graph g = test::random_graph(n, 2 + seed % 3, 4, seed * 13 + 37);
    WeightedGraph gw = assign_weights(g, -9, 9, seed);
    try {
      EdsResult r = solve_eds(gw);
      auto ref = oracle::eds_bruteforce(gw);
      CHECK(r.solution.has_value() == ref.best.has_value());
      if (r.solution) CHECK(r.solution->weight == ref.best->weight);
    } catch (const StructureViolation&) {
      violations++;  // legal on non-P6-free inputs
    }
  }
  (void)violations;
}

TEST_CASE("per-bag state counts are recorded") {
  auto corpus = test::pkfree_corpus(5, 6, 8, 12, 1, 5, 4242);
  for (const auto& gw : corpus) {
    EdsResult r = solve_eds(gw);
    CHECK_FALSE(r.stats.eds_bag_states.empty());
    CHECK(r.stats.eds_branch_nodes > 0);
  }
}

TEST_CASE("regression: instances reaching the rarer branching steps") {
  // seeds found by survey; they drive the bad-vertex, repair and final
  // branches, which plain random corpora rarely reach
  struct Pin {
    uint64_t seed;
    int n, p_num;
  };
  const Pin pins[] = {{2076, 12, 2}, {5815, 15, 1}, {11935, 15, 1}, {12670, 14, 1},
                      {13510, 14, 1}, {22030, 14, 1}, {27101, 13, 2}, {27580, 12, 1}};
  SolveStats total;
  for (const Pin& pin : pins) {
    Graph g = test::random_graph(pin.n, pin.p_num, 7, pin.seed * 13 + 1);
    WeightedGraph gw = WeightedGraph::unit(g);
    EdsConfig cfg;
    cfg.mode = EdsMode::fallback;
    EdsResult r = solve_eds(gw, cfg);
    auto ref = oracle::eds_bruteforce(gw);
    CHECK(r.solution.has_value() == ref.best.has_value());
    if (r.solution) CHECK(r.solution->weight == ref.best->weight);
    total.eds_bad_vertex_branches += r.stats.eds_bad_vertex_branches;
    total.eds_repair_branches += r.stats.eds_repair_branches;
    total.eds_final_branches += r.stats.eds_final_branches;
  }
  CHECK(total.eds_bad_vertex_branches >= 8);
  CHECK(total.eds_repair_branches >= 4);
  CHECK(total.eds_final_branches >= 10);
}

TEST_CASE("clique flowers at n up to 196: structure-derived optimum") {
  // Every efficient dominating set of a flower picks exactly one non-center
  // vertex per petal (a center in the solution would leave the other petals'
  // outer vertices undominatable), so the optimum is the sum of per-petal
  // maxima.
  for (int k : {10, 12, 14}) {
    Graph g = test::clique_flower(k);
    WeightedGraph gw = assign_weights(g, -30, 30, 1000 + k);
    long long expect = 0;
    for (int i = 0; i < k; i++) {
      long long best = gw.weights[k + i * (k - 1)];
      for (int u = 1; u < k - 1; u++) best = std::max(best, gw.weights[k + i * (k - 1) + u]);
      expect += best;
    }
    EdsResult r = solve_eds(gw);
    REQUIRE(r.solution.has_value());
    CHECK(r.solution->weight == expect);
    CHECK(r.solution->chosen.count() == k);
    CHECK(is_efficient_dominating_set(g, r.solution->chosen));
  }
}

TEST_CASE("shrink-factor accounting is clean on the verified-P6-free suite") {
  auto corpus = test::pkfree_corpus(150, 6, 2, 14, -9, 9, 272727);
  long long s16 = 0, s2 = 0;
  for (const auto& gw : corpus) {
    EdsResult r = solve_eds(gw);
    s16 += r.stats.eds_shrink16_violations;
    s2 += r.stats.eds_shrink2_violations;
  }
  CHECK(s16 == 0);
  CHECK(s2 == 0);
}

TEST_CASE("strict mode names the violated guarantee on non-P6-free inputs") {
  struct Pin {
    uint64_t seed;
    int n, p_num;
    const char* what;
  };
  const Pin pins[] = {
      {2076, 12, 2, "dichotomy"},     // bad-vertex dominator dichotomy
      {5815, 15, 1, "cover B"},       // top active components do not cover B
      {12670, 14, 1, "fully adjacent"},  // no Cuniv witness for the repair
  };
  for (const Pin& pin : pins) {
    Graph g = test::random_graph(pin.n, pin.p_num, 7, pin.seed * 13 + 1);
    WeightedGraph gw = WeightedGraph::unit(g);
    CHECK_THROWS_WITH_AS(solve_eds(gw), doctest::Contains(pin.what), StructureViolation);
  }
}

TEST_CASE("identical input gives identical witness") {
  auto corpus = test::pkfree_corpus(10, 6, 6, 14, -20, 20, 838383);
  for (const auto& gw : corpus) {
    EdsResult a = solve_eds(gw);
    EdsResult b = solve_eds(gw);
    CHECK(a.solution.has_value() == b.solution.has_value());
    if (a.solution) CHECK(a.solution->chosen == b.solution->chosen);
  }
}

TEST_CASE("node budget raises BudgetExceeded") {
  auto corpus = test::pkfree_corpus(1, 6, 12, 14, 1, 1, 8181);
  EdsConfig cfg;
  cfg.node_budget = 1;
  CHECK_THROWS_AS(solve_eds(corpus[0], cfg), BudgetExceeded);
}
