#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "p6/errors.hpp"
#include "p6/oracle.hpp"

using namespace p6;

namespace {

// Independent validation of the validator: plain 2^n subset scan.
Solution mwis_subset_scan(const WeightedGraph& gw) {
  int n = gw.graph.n();
  Solution best{0, VertexSet(n)};
  for (unsigned long long mask = 0; mask < (1ull << n); mask++) {
    VertexSet s(n);
    for (int v = 0; v < n; v++) {
      if ((mask >> v) & 1) s.set(v);
    }
    if (!is_independent_set(gw.graph, s)) continue;
    long long w = weight_of(gw, s);
    if (w > best.weight) best = {w, s};
  }
  return best;
}

}  // namespace

TEST_CASE("mwis_bruteforce examples") {
  WeightedGraph p4(path_graph(4), {1, 3, 3, 1});
  CHECK(oracle::mwis_bruteforce(p4).weight == 4);
  CHECK(oracle::mwis_bruteforce(WeightedGraph::unit(complete_graph(5))).weight == 1);
  CHECK(oracle::mwis_bruteforce(WeightedGraph::unit(Graph(0))).weight == 0);
}

TEST_CASE("mwis_bruteforce agrees with full subset scan up to n = 12") {
  for (uint64_t seed = 0; seed < 60; seed++) {
    int n = 1 + seed % 12;
    Graph g = test::random_graph(n, 1 + seed % 3, 4, seed);
    WeightedGraph gw = assign_weights(g, 0, 20, seed + 1000);
    Solution a = oracle::mwis_bruteforce(gw);
    Solution b = mwis_subset_scan(gw);
    CHECK(a.weight == b.weight);
    CHECK(is_independent_set(gw.graph, a.chosen));
    CHECK(weight_of(gw, a.chosen) == a.weight);
  }
}

TEST_CASE("eds_bruteforce examples") {
  auto p4 = oracle::eds_bruteforce(WeightedGraph::unit(path_graph(4)));
  REQUIRE(p4.best.has_value());
  CHECK(p4.best->chosen == VertexSet::of(4, {0, 3}));
  CHECK(p4.cardinality == 2);

  CHECK_FALSE(oracle::eds_bruteforce(WeightedGraph::unit(cycle_graph(4))).best.has_value());

  WeightedGraph k1(Graph(1), {-3});
  auto r = oracle::eds_bruteforce(k1);
  REQUIRE(r.best.has_value());
  CHECK(r.best->weight == -3);
}

TEST_CASE("eds enumeration: common cardinality and exact domination") {
  for (uint64_t seed = 0; seed < 60; seed++) {
    int n = 1 + seed % 12;
    Graph g = test::random_graph(n, 1 + seed % 3, 4, seed * 3 + 1);
    auto all = oracle::eds_enumerate(g);
    int card = -1;
    for (const VertexSet& x : all) {
      CHECK(is_efficient_dominating_set(g, x));
      if (card == -1) card = x.count();
      CHECK(x.count() == card);
    }
  }
}

TEST_CASE("minimal_separators_bruteforce examples") {
  auto p4 = oracle::minimal_separators_bruteforce(path_graph(4));
  REQUIRE(p4.size() == 2);
  CHECK(p4[0] == VertexSet::of(4, {1}));
  CHECK(p4[1] == VertexSet::of(4, {2}));

  auto c4 = oracle::minimal_separators_bruteforce(cycle_graph(4));
  REQUIRE(c4.size() == 2);
  CHECK(c4[0] == VertexSet::of(4, {0, 2}));
  CHECK(c4[1] == VertexSet::of(4, {1, 3}));

  CHECK(oracle::minimal_separators_bruteforce(complete_graph(5)).empty());
}

TEST_CASE("pmcs_bruteforce examples") {
  auto p4 = oracle::pmcs_bruteforce(path_graph(4));
  REQUIRE(p4.size() == 3);
  CHECK(p4[0] == VertexSet::of(4, {0, 1}));
  CHECK(p4[1] == VertexSet::of(4, {1, 2}));
  CHECK(p4[2] == VertexSet::of(4, {2, 3}));

  auto k3 = oracle::pmcs_bruteforce(complete_graph(3));
  REQUIRE(k3.size() == 1);
  CHECK(k3[0] == VertexSet::full(3));

  auto c4 = oracle::pmcs_bruteforce(cycle_graph(4));
  CHECK(c4.size() == 4);
  for (const VertexSet& omega : c4) CHECK(omega.count() == 3);
}

TEST_CASE("induced_path_bruteforce examples") {
  CHECK_FALSE(oracle::induced_path_bruteforce(cycle_graph(6), 6));
  CHECK(oracle::induced_path_bruteforce(path_graph(6), 6));
  CHECK_FALSE(oracle::induced_path_bruteforce(complete_graph(4), 3));
}

TEST_CASE("limits raise LimitExceeded") {
  oracle::Limits lim;
  lim.mwis = 4;
  CHECK_THROWS_AS(oracle::mwis_bruteforce(WeightedGraph::unit(path_graph(5)), lim), LimitExceeded);
  lim.eds = 4;
  CHECK_THROWS_AS(oracle::eds_bruteforce(WeightedGraph::unit(path_graph(5)), lim), LimitExceeded);
}
