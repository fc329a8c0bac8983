#include "p6/oracle.hpp"

#include <algorithm>

#include "p6/errors.hpp"

namespace p6 {

bool is_efficient_dominating_set(const Graph& g, const VertexSet& s) {
  for (int v = 0; v < g.n(); v++) {
    int dom = closed_neighborhood(g, v).count_and(s);
    if (dom != 1) return false;
  }
  return true;
}

namespace oracle {

namespace {

Solution mwis_rec(const WeightedGraph& gw, const VertexSet& alive) {
  if (alive.empty()) return {0, VertexSet(gw.graph.n())};
  int v = -1, best_deg = -1;
  for (int u : alive) {
    int d = gw.graph.neighbors(u).count_and(alive);
    if (d > best_deg) {
      best_deg = d;
      v = u;
    }
  }
  VertexSet without = alive;
  without.reset(v);
  Solution excl = mwis_rec(gw, without);
  Solution incl = mwis_rec(gw, alive - closed_neighborhood(gw.graph, v));
  incl.weight += gw.weights[v];
  incl.chosen.set(v);
  return incl.weight > excl.weight ? incl : excl;
}

}  // namespace

Solution mwis_bruteforce(const WeightedGraph& gw, const Limits& lim) {
  if (gw.graph.n() > lim.mwis) throw LimitExceeded("mwis_bruteforce n > limit");
  for (long long w : gw.weights) {
    if (w < 0) throw std::invalid_argument("mwis weights must be non-negative");
  }
  return mwis_rec(gw, gw.graph.vertices());
}

namespace {

// Exhaustive decide-each-vertex backtracking with exact-domination pruning:
// dom counts are capped at 1 and every vertex is checked once its whole
// closed neighborhood has been decided.
struct EdsSearch {
  const Graph& g;
  std::vector<int> dom;
  std::vector<std::vector<int>> finalize_at;  // vertices whose N[v] closes at index i
  VertexSet chosen;
  const std::function<void(const VertexSet&)>& emit;

  EdsSearch(const Graph& g_, const std::function<void(const VertexSet&)>& emit_)
      : g(g_), dom(g_.n(), 0), finalize_at(g_.n()), chosen(g_.n()), emit(emit_) {
    for (int v = 0; v < g.n(); v++) {
      int last = v;
      for (int u : g.neighbors(v)) last = std::max(last, u);
      finalize_at[last].push_back(v);
    }
  }

  bool finalized_ok(int i) const {
    for (int v : finalize_at[i]) {
      if (dom[v] != 1) return false;
    }
    return true;
  }

  void rec(int i) {
    if (i == g.n()) {
      emit(chosen);
      return;
    }
    // skip i
    if (finalized_ok(i)) rec(i + 1);
    // take i
    bool can = true;
    for (int u : closed_neighborhood(g, i)) {
      if (dom[u] == 1) {
        can = false;
        break;
      }
    }
    if (can) {
      for (int u : closed_neighborhood(g, i)) dom[u]++;
      chosen.set(i);
      if (finalized_ok(i)) rec(i + 1);
      chosen.reset(i);
      for (int u : closed_neighborhood(g, i)) dom[u]--;
    }
  }
};

}  // namespace

std::vector<VertexSet> eds_enumerate(const Graph& g, const Limits& lim) {
  if (g.n() > lim.eds) throw LimitExceeded("eds_enumerate n > limit");
  std::vector<VertexSet> all;
  std::function<void(const VertexSet&)> emit = [&](const VertexSet& s) { all.push_back(s); };
  EdsSearch search(g, emit);
  search.rec(0);
  return all;
}

EdsReference eds_bruteforce(const WeightedGraph& gw, const Limits& lim) {
  if (gw.graph.n() > lim.eds) throw LimitExceeded("eds_bruteforce n > limit");
  EdsReference ref;
  std::function<void(const VertexSet&)> emit = [&](const VertexSet& s) {
    long long w = weight_of(gw, s);
    int card = s.count();
    if (ref.cardinality == -1) ref.cardinality = card;
    assert(ref.cardinality == card);  // all efficient dominating sets share one cardinality
    if (!ref.best || w > ref.best->weight) ref.best = Solution{w, s};
  };
  EdsSearch search(gw.graph, emit);
  search.rec(0);
  return ref;
}

std::vector<VertexSet> minimal_separators_bruteforce(const Graph& g, const Limits& lim) {
  int n = g.n();
  if (n > lim.separators) throw LimitExceeded("minimal_separators_bruteforce n > limit");
  std::vector<VertexSet> out;
  for (unsigned long long mask = 0; mask < (1ull << n); mask++) {
    VertexSet s(n);
    for (int v = 0; v < n; v++) {
      if ((mask >> v) & 1) s.set(v);
    }
    VertexSet rest = g.vertices() - s;
    int full = 0;
    for (const VertexSet& c : connected_components(g, rest)) {
      VertexSet nb = open_neighborhood(g, c);
      if (s.is_subset_of(nb)) full++;
    }
    if (full >= 2) out.push_back(s);
  }
  return out;
}

std::vector<VertexSet> pmcs_bruteforce(const Graph& g, const Limits& lim) {
  int n = g.n();
  if (n > lim.pmcs) throw LimitExceeded("pmcs_bruteforce n > limit");
  std::vector<VertexSet> out;
  for (unsigned long long mask = 1; mask < (1ull << n); mask++) {
    VertexSet omega(n);
    for (int v = 0; v < n; v++) {
      if ((mask >> v) & 1) omega.set(v);
    }
    // Two-condition characterization check; no triangulation enumeration needed.
    VertexSet rest = g.vertices() - omega;
    auto comps = connected_components(g, rest);
    bool ok = true;
    std::vector<VertexSet> nbs;
    for (const VertexSet& c : comps) {
      VertexSet nb = open_neighborhood(g, c);
      if (omega.is_subset_of(nb)) {
        ok = false;
        break;
      }
      nbs.push_back(nb);
    }
    if (!ok) continue;
    auto verts = omega.to_vector();
    for (size_t i = 0; i < verts.size() && ok; i++) {
      for (size_t j = i + 1; j < verts.size() && ok; j++) {
        if (g.has_edge(verts[i], verts[j])) continue;
        bool covered = false;
        for (const VertexSet& nb : nbs) {
          if (nb.get(verts[i]) && nb.get(verts[j])) {
            covered = true;
            break;
          }
        }
        if (!covered) ok = false;
      }
    }
    if (ok) out.push_back(omega);
  }
  return out;
}

bool induced_path_bruteforce(const Graph& g, int k, const Limits& lim) {
  int n = g.n();
  if (n > lim.induced_path) throw LimitExceeded("induced_path_bruteforce n > limit");
  if (k > n) return false;
  if (k == 1) return n >= 1;
  // scan all k-subsets; a subset works iff it induces a connected graph with
  // k-1 edges and maximum degree 2
  std::vector<int> idx(k);
  std::function<bool(int, int)> choose = [&](int pos, int from) -> bool {
    if (pos == k) {
      VertexSet s(n);
      for (int v : idx) s.set(v);
      int edges = 0;
      for (int v : s) {
        int d = g.neighbors(v).count_and(s);
        if (d > 2) return false;
        edges += d;
      }
      if (edges != 2 * (k - 1)) return false;
      return is_connected_within(g, s);
    }
    for (int v = from; v < n; v++) {
      idx[pos] = v;
      if (choose(pos + 1, v + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

}  // namespace oracle
}  // namespace p6
