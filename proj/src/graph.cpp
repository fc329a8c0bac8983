#include "p6/graph.hpp"

#include <algorithm>

namespace p6 {

VertexSet open_neighborhood(const Graph& g, const VertexSet& a) {
  VertexSet out(g.n());
  for (int v : a) out |= g.neighbors(v);
  out -= a;
  return out;
}

VertexSet closed_neighborhood(const Graph& g, int v) {
  VertexSet out = g.neighbors(v);
  out.set(v);
  return out;
}

VertexSet second_closed_neighborhood(const Graph& g, int v) {
  VertexSet out = closed_neighborhood(g, v);
  for (int u : g.neighbors(v)) out |= g.neighbors(u);
  out.set(v);
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  std::vector<VertexSet> comps;
  VertexSet todo = within;
  for (int s = todo.first(); s != -1; s = todo.first()) {
    VertexSet comp(g.n());
    VertexSet frontier(g.n());
    frontier.set(s);
    todo.reset(s);
    comp.set(s);
    while (!frontier.empty()) {
      VertexSet next(g.n());
      for (int v : frontier) next |= g.neighbors(v);
      next &= todo;
      comp |= next;
      todo -= next;
      frontier = next;
    }
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected_within(const Graph& g, const VertexSet& within) {
  if (within.empty()) return true;
  auto comps = connected_components(g, within);
  return comps.size() == 1;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.old_ids = s.to_vector();
  out.new_ids.assign(g.n(), -1);
  for (size_t i = 0; i < out.old_ids.size(); i++) out.new_ids[out.old_ids[i]] = static_cast<int>(i);
  out.graph = Graph(static_cast<int>(out.old_ids.size()));
  for (size_t i = 0; i < out.old_ids.size(); i++) {
    int u = out.old_ids[i];
    for (int v : g.neighbors(u)) {
      if (v > u && s.get(v)) out.graph.add_edge(static_cast<int>(i), out.new_ids[v]);
    }
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, const VertexSet& within, int src) {
  std::vector<int> dist(g.n(), -1);
  assert(within.get(src));
  dist[src] = 0;
  VertexSet seen(g.n());
  seen.set(src);
  VertexSet frontier(g.n());
  frontier.set(src);
  int d = 0;
  while (!frontier.empty()) {
    VertexSet next(g.n());
    for (int v : frontier) next |= g.neighbors(v);
    next &= within;
    next -= seen;
    d++;
    for (int v : next) dist[v] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

bool pairwise_distance_at_least(const Graph& g, const VertexSet& s, int d) {
  assert(d >= 1);
  if (s.count() <= 1) return true;
  for (int u : s) {
    // bounded BFS to depth d-1; any other member reached means distance < d
    VertexSet seen(g.n());
    seen.set(u);
    VertexSet frontier = seen;
    for (int step = 1; step <= d - 1 && !frontier.empty(); step++) {
      VertexSet next(g.n());
      for (int v : frontier) next |= g.neighbors(v);
      next -= seen;
      if (next.intersects(s)) return false;
      seen |= next;
      frontier = next;
    }
  }
  return true;
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  for (int v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

long long weight_of(const WeightedGraph& gw, const VertexSet& s) {
  long long w = 0;
  for (int v : s) w += gw.weights[v];
  return w;
}

Graph path_graph(int k) {
  Graph g(k);
  for (int i = 0; i + 1 < k; i++) g.add_edge(i, i + 1);
  return g;
}

Graph cycle_graph(int k) {
  Graph g = path_graph(k);
  if (k >= 3) g.add_edge(k - 1, 0);
  return g;
}

Graph complete_graph(int k) {
  Graph g(k);
  for (int i = 0; i < k; i++) {
    for (int j = i + 1; j < k; j++) g.add_edge(i, j);
  }
  return g;
}

}  // namespace p6
