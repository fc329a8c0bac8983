#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "p6/vertex_set.hpp"

namespace p6 {

// Simple undirected graph over dense 0-based vertex ids. Adjacency is kept as
// one bit-row per vertex; symmetric and irreflexive by construction.
// Immutable once built (the solvers share a Graph across recursion and never
// mutate it).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}

  int n() const { return n_; }
  int edge_count() const { return m_; }

  void add_edge(int u, int v) {
    assert(u != v && u >= 0 && v >= 0 && u < n_ && v < n_);
    if (adj_[u].get(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    m_++;
  }
  bool has_edge(int u, int v) const { return adj_[u].get(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; u++) {
      for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.push_back({u, v});
    }
    return out;
  }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

struct WeightedGraph {
  Graph graph;
  std::vector<long long> weights;  // length n

  WeightedGraph() = default;
  explicit WeightedGraph(Graph g, std::vector<long long> w) : graph(std::move(g)), weights(std::move(w)) {
    assert(static_cast<int>(weights.size()) == graph.n());
  }
  static WeightedGraph unit(Graph g) {
    int n = g.n();
    return WeightedGraph(std::move(g), std::vector<long long>(n, 1));
  }
};

// N(A) \ A.
VertexSet open_neighborhood(const Graph& g, const VertexSet& a);
// N(v) united with {v}.
VertexSet closed_neighborhood(const Graph& g, int v);
// All vertices at distance <= 2 from v, including v.
VertexSet second_closed_neighborhood(const Graph& g, int v);

// Partition of `within` into maximal connected subsets of G[within], ordered
// by smallest member id.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
bool is_connected_within(const Graph& g, const VertexSet& within);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_ids;  // new id -> old id, ascending
  std::vector<int> new_ids;  // old id -> new id, -1 outside
};
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

// True iff dist_G(u, v) >= d for all distinct u, v in s.
bool pairwise_distance_at_least(const Graph& g, const VertexSet& s, int d);

// BFS distances from src within G[within]; unreachable = -1.
std::vector<int> bfs_distances(const Graph& g, const VertexSet& within, int src);

bool is_independent_set(const Graph& g, const VertexSet& s);
long long weight_of(const WeightedGraph& gw, const VertexSet& s);

// Optimal vertex set plus its weight, shared by the solvers and the oracles.
struct Solution {
  long long weight = 0;
  VertexSet chosen;
};

// Small builders used throughout the tests and generators.
Graph path_graph(int k);
Graph cycle_graph(int k);
Graph complete_graph(int k);

}  // namespace p6
