#include "p6/chordal.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <queue>

#include "p6/errors.hpp"
#include "p6/nuke.hpp"

namespace p6 {

namespace {

// Verifies that `order` is a perfect elimination ordering of the graph given
// by `adj` restricted to `within`.
bool verify_peo(const std::vector<VertexSet>& adj, const VertexSet& within, const EliminationOrder& order, int n) {
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < order.size(); i++) pos[order[i]] = static_cast<int>(i);
  for (int v : order) {
    // later neighbors of v; the earliest of them must see all the others
    int follower = -1;
    VertexSet later(n);
    for (int u : adj[v]) {
      if (!within.get(u) || pos[u] <= pos[v]) continue;
      later.set(u);
      if (follower == -1 || pos[u] < pos[follower]) follower = u;
    }
    if (follower == -1) continue;
    later.reset(follower);
    if (!later.is_subset_of(adj[follower])) return false;
  }
  return true;
}

EliminationOrder mcs_order(const std::vector<VertexSet>& adj, const VertexSet& within, int n) {
  std::vector<int> label(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> picked;
  int cnt = within.count();
  for (int step = 0; step < cnt; step++) {
    int v = -1;
    for (int u : within) {
      if (!numbered[u] && (v == -1 || label[u] > label[v])) v = u;
    }
    numbered[v] = 1;
    picked.push_back(v);
    for (int u : adj[v]) {
      if (within.get(u) && !numbered[u]) label[u]++;
    }
  }
  std::reverse(picked.begin(), picked.end());
  return picked;
}

std::vector<VertexSet> adjacency_rows(const Graph& g) {
  std::vector<VertexSet> adj(g.n());
  for (int v = 0; v < g.n(); v++) adj[v] = g.neighbors(v);
  return adj;
}

// Maximal cliques of a chordal graph from a PEO: one candidate per vertex
// (itself plus later neighbors), filtered to the inclusion-maximal ones.
std::vector<VertexSet> peo_maximal_cliques(const std::vector<VertexSet>& adj, const VertexSet& within,
                                           const EliminationOrder& order, int n) {
  std::vector<int> pos(n, -1);
  for (size_t i = 0; i < order.size(); i++) pos[order[i]] = static_cast<int>(i);
  std::vector<VertexSet> cand;
  for (int v : order) {
    VertexSet c(n);
    c.set(v);
    for (int u : adj[v]) {
      if (within.get(u) && pos[u] > pos[v]) c.set(u);
    }
    cand.push_back(c);
  }
  std::vector<VertexSet> out;
  for (size_t i = 0; i < cand.size(); i++) {
    bool maximal = true;
    for (size_t j = 0; j < cand.size() && maximal; j++) {
      if (i == j) continue;
      if (cand[i].is_subset_of(cand[j]) && !(cand[j].is_subset_of(cand[i]) && i < j)) maximal = false;
    }
    if (maximal) out.push_back(cand[i]);
  }
  return out;
}

}  // namespace

std::optional<EliminationOrder> is_chordal_within(const Graph& g, const VertexSet& within) {
  auto adj = adjacency_rows(g);
  EliminationOrder order = mcs_order(adj, within, g.n());
  if (verify_peo(adj, within, order, g.n())) return order;
  return std::nullopt;
}

std::optional<EliminationOrder> is_chordal(const Graph& g) {
  return is_chordal_within(g, g.vertices());
}

Triangulation minimal_triangulation_within(const Graph& g, const VertexSet& within) {
  const int n = g.n();
  const long long INF = LLONG_MAX;
  std::vector<long long> wt(n, 0);
  std::vector<char> numbered(n, 0);
  std::vector<int> picked;
  Triangulation out;
  int cnt = within.count();
  std::vector<long long> key(n);

  for (int step = 0; step < cnt; step++) {
    int v = -1;
    for (int u : within) {
      if (!numbered[u] && (v == -1 || wt[u] > wt[v])) v = u;
    }
    // Bottleneck search from v: key[u] = min over u-v paths of the maximum
    // weight of an internal unnumbered vertex (-1 for a direct edge). MCS-M
    // adds u to the update set iff key[u] < wt[u].
    std::fill(key.begin(), key.end(), INF);
    using Item = std::pair<long long, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    for (int u : g.neighbors(v)) {
      if (within.get(u) && !numbered[u]) {
        key[u] = -1;
        pq.push({-1, u});
      }
    }
    while (!pq.empty()) {
      auto [k, u] = pq.top();
      pq.pop();
      if (k > key[u]) continue;
      long long through = std::max(key[u], wt[u]);
      for (int z : g.neighbors(u)) {
        if (!within.get(z) || numbered[z] || z == v) continue;
        if (through < key[z]) {
          key[z] = through;
          pq.push({through, z});
        }
      }
    }
    for (int u : within) {
      if (numbered[u] || u == v || key[u] == INF) continue;
      if (key[u] < wt[u]) {
        wt[u]++;
        if (!g.has_edge(u, v)) out.fill.push_back(std::minmax(u, v));
      }
    }
    numbered[v] = 1;
    picked.push_back(v);
  }
  std::reverse(picked.begin(), picked.end());
  out.order = picked;
  std::sort(out.fill.begin(), out.fill.end());
  return out;
}

FillEdges minimal_triangulation(const Graph& g) {
  return minimal_triangulation_within(g, g.vertices()).fill;
}

CliqueTree clique_tree_within(const Graph& g, const VertexSet& within, const Triangulation& tri) {
  const int n = g.n();
  std::vector<VertexSet> adj = adjacency_rows(g);
  for (auto [u, v] : tri.fill) {
    adj[u].set(v);
    adj[v].set(u);
  }
  CliqueTree t;
  t.bags = peo_maximal_cliques(adj, within, tri.order, n);

  // Maximum-weight spanning tree of the clique intersection graph; weight-0
  // edges link different components deterministically.
  int b = static_cast<int>(t.bags.size());
  struct Edge {
    int w, i, j;
  };
  std::vector<Edge> cand;
  for (int i = 0; i < b; i++) {
    for (int j = i + 1; j < b; j++) cand.push_back({t.bags[i].count_and(t.bags[j]), i, j});
  }
  std::sort(cand.begin(), cand.end(), [](const Edge& a, const Edge& b2) {
    if (a.w != b2.w) return a.w > b2.w;
    if (a.i != b2.i) return a.i < b2.i;
    return a.j < b2.j;
  });
  std::vector<int> parent(b);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : cand) {
    int a = find(e.i), c = find(e.j);
    if (a == c) continue;
    parent[a] = c;
    t.tree_edges.push_back({e.i, e.j});
    if (static_cast<int>(t.tree_edges.size()) == b - 1) break;
  }
  t.root = b > 0 ? 0 : -1;
  return t;
}

CliqueTree clique_tree(const Graph& g, const FillEdges& fill) {
  // Recover an elimination order for G+F via MCS on the filled graph.
  Graph h = g;
  for (auto [u, v] : fill) h.add_edge(u, v);
  auto order = is_chordal(h);
  if (!order) throw PreconditionViolation("clique_tree: G+F is not chordal");
  Triangulation tri{fill, *order};
  return clique_tree_within(g, g.vertices(), tri);
}

int central_bag_within(const Graph& g, const VertexSet& within, const CliqueTree& t) {
  int total = within.count();
  for (size_t i = 0; i < t.bags.size(); i++) {
    VertexSet rest = within - t.bags[i];
    bool ok = true;
    for (const VertexSet& c : connected_components(g, rest)) {
      if (2 * c.count() > total) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<int>(i);
  }
  throw CentralBagNotFound("no bag balances the components");
}

int central_bag(const Graph& g, const CliqueTree& t) {
  return central_bag_within(g, g.vertices(), t);
}

int weighted_central_bag(const Graph& g, const CliqueTree& t, const Measure& mu) {
  Rational half(1, 2);
  for (size_t i = 0; i < t.bags.size(); i++) {
    VertexSet rest = g.vertices() - t.bags[i];
    bool ok = true;
    for (const VertexSet& c : connected_components(g, rest)) {
      if (mu.of(c) > half) {
        ok = false;
        break;
      }
    }
    if (ok) return static_cast<int>(i);
  }
  throw CentralBagNotFound("no bag balances the measure");
}

bool is_minimal_separator_within(const Graph& g, const VertexSet& within, const VertexSet& s) {
  VertexSet rest = within - s;
  int full = 0;
  for (const VertexSet& c : connected_components(g, rest)) {
    VertexSet nb = open_neighborhood(g, c);
    nb &= within;
    if (s.is_subset_of(nb)) {
      if (++full >= 2) return true;
    }
  }
  return false;
}

bool is_minimal_separator(const Graph& g, const VertexSet& s) {
  return is_minimal_separator_within(g, g.vertices(), s);
}

bool is_pmc(const Graph& g, const VertexSet& omega) {
  if (omega.empty()) return false;
  VertexSet rest = g.vertices() - omega;
  auto comps = connected_components(g, rest);
  std::vector<VertexSet> nbs;
  nbs.reserve(comps.size());
  for (const VertexSet& c : comps) {
    VertexSet nb = open_neighborhood(g, c);
    if (!(nb.is_subset_of(omega) && !(omega.is_subset_of(nb)))) return false;  // N(C) must be proper
    nbs.push_back(nb);
  }
  auto verts = omega.to_vector();
  for (size_t i = 0; i < verts.size(); i++) {
    for (size_t j = i + 1; j < verts.size(); j++) {
      int x = verts[i], y = verts[j];
      if (g.has_edge(x, y)) continue;
      bool covered = false;
      for (const VertexSet& nb : nbs) {
        if (nb.get(x) && nb.get(y)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

std::vector<VertexSet> component_separators(const Graph& g, const VertexSet& omega) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices() - omega;
  for (const VertexSet& c : connected_components(g, rest)) {
    VertexSet nb = open_neighborhood(g, c);
    if (!is_minimal_separator(g, nb)) {
      throw StructureViolation("component neighborhood is not a minimal separator (omega is not a pmc)");
    }
    out.push_back(nb);
  }
  return out;
}

}  // namespace p6
