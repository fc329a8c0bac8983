#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "p6/chordal.hpp"
#include "p6/errors.hpp"
#include "p6/gen.hpp"
#include "p6/io.hpp"
#include "p6/pattern.hpp"

using namespace p6;

TEST_CASE("gen_random_pkfree produces verified instances") {
  Graph g = gen_random_pkfree(18, Rational(3, 10), 6, 1, 200);
  CHECK(g.n() <= 18);
  CHECK(is_pk_free(g, 6));

  Graph k1 = gen_random_pkfree(1, Rational(1, 2), 6, 3, 10);
  CHECK(k1.n() == 1);
}

TEST_CASE("gen_random_pkfree is deterministic per seed") {
  Graph a = gen_random_pkfree(14, Rational(1, 4), 6, 42, 200);
  Graph b = gen_random_pkfree(14, Rational(1, 4), 6, 42, 200);
  CHECK(write_instance(WeightedGraph::unit(a)) == write_instance(WeightedGraph::unit(b)));
  Graph c = gen_random_pkfree(14, Rational(1, 4), 6, 43, 200);
  // different seed, almost surely different instance
  CHECK(write_instance(WeightedGraph::unit(a)) != write_instance(WeightedGraph::unit(c)));
}

TEST_CASE("repair budget exhaustion raises GenerationFailed") {
  CHECK_THROWS_AS(gen_random_pkfree(30, Rational(1, 2), 4, 7, 1), GenerationFailed);
}

TEST_CASE("gen_cograph is always P4-free") {
  for (uint64_t seed = 0; seed < 30; seed++) {
    Graph g = gen_cograph(1 + seed % 16, seed);
    CHECK(is_pk_free(g, 4));
  }
  CHECK(gen_cograph(1, 5).n() == 1);
  Graph k2 = gen_cograph(2, 11);
  CHECK(k2.n() == 2);
}

TEST_CASE("nuke counterexample structure") {
  auto c2 = gen_counterexample_nuke(2);
  CHECK(c2.graph.n() == 6);
  int bridges = 0;
  for (auto [u, v] : c2.graph.edges()) {
    if ((u < 2) != (v < 2)) bridges++;
  }
  CHECK(bridges == 2);

  auto c4 = gen_counterexample_nuke(4);
  CHECK(c4.graph.n() == 20);
  CHECK_FALSE(is_pk_free(c4.graph, 6));
  CHECK(is_pk_free(c4.graph, 7));

  auto c10 = gen_counterexample_nuke(10);
  CHECK(c10.graph.n() == 110);
  int max_adj = 0;
  for (int v = 0; v < c10.graph.n(); v++) max_adj = std::max(max_adj, c10.graph.neighbors(v).count_and(c10.nuke));
  CHECK(max_adj == 1);
  // tau clamped into the eta = 0.1 window
  CHECK(10 * c10.tau >= 8 * 110);
  CHECK(10 * c10.tau <= 9 * 110);
}

TEST_CASE("separator counterexample structure") {
  auto c3 = gen_counterexample_separator(3);
  CHECK(c3.graph.n() == 15);
  CHECK(c3.separator.count() == 9);
  CHECK(is_minimal_separator(c3.graph, c3.separator));
  // A and B are full components
  auto comps = connected_components(c3.graph, c3.graph.vertices() - c3.separator);
  REQUIRE(comps.size() == 2);
  for (const auto& c : comps) {
    CHECK(c.count() == 3);
    CHECK(c3.separator.is_subset_of(open_neighborhood(c3.graph, c)));
  }
  int max_adj = 0;
  for (int v = 0; v < c3.graph.n(); v++) max_adj = std::max(max_adj, c3.graph.neighbors(v).count_and(c3.separator));
  CHECK(max_adj == 3);

  auto c2 = gen_counterexample_separator(2);
  CHECK(c2.graph.n() == 8);
  CHECK(is_minimal_separator(c2.graph, c2.separator));
}

TEST_CASE("assign_weights") {
  Graph g = path_graph(6);
  WeightedGraph unit = assign_weights(g, 1, 1, 9);
  for (long long w : unit.weights) CHECK(w == 1);
  WeightedGraph zero = assign_weights(g, 0, 0, 9);
  for (long long w : zero.weights) CHECK(w == 0);
  WeightedGraph a = assign_weights(g, -5, 12, 123);
  WeightedGraph b = assign_weights(g, -5, 12, 123);
  CHECK(a.weights == b.weights);
  for (long long w : a.weights) {
    CHECK(w >= -5);
    CHECK(w <= 12);
  }
}
