#include "p6/pattern.hpp"

#include <algorithm>

#include "p6/errors.hpp"

namespace p6 {

namespace {

struct PathSearch {
  const Graph& g;
  int k;
  long long budget;
  long long used = 0;
  std::vector<int> path;
  // forbidden[d] = closed neighborhoods of path[0..d-1]; an extension of
  // path[0..d] must avoid forbidden[d] so it stays induced.
  std::vector<VertexSet> forbidden;

  explicit PathSearch(const Graph& g_, int k_, long long budget_) : g(g_), k(k_), budget(budget_) {}

  void charge() {
    if (++used > budget) throw BudgetExceeded("induced path search");
  }

  bool extend() {
    int depth = static_cast<int>(path.size());
    if (depth == k) return true;
    int last = path.back();
    VertexSet cand = g.neighbors(last) - forbidden[depth - 1];
    for (int x : cand) {
      charge();
      path.push_back(x);
      if (depth + 1 < k) forbidden[depth] = forbidden[depth - 1] | closed_neighborhood(g, last);
      if (extend()) return true;
      path.pop_back();
    }
    return false;
  }

  std::optional<std::vector<int>> run() {
    if (k > g.n()) return std::nullopt;
    if (k == 1) {
      if (g.n() == 0) return std::nullopt;
      return std::vector<int>{0};
    }
    forbidden.assign(k, VertexSet(g.n()));
    for (int s = 0; s < g.n(); s++) {
      charge();
      path.assign(1, s);
      forbidden[0] = VertexSet(g.n());
      forbidden[0].set(s);
      if (extend()) return path;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<std::vector<int>> find_induced_path(const Graph& g, int k, long long budget) {
  assert(k >= 1);
  PathSearch s(g, k, budget);
  return s.run();
}

bool is_pk_free(const Graph& g, int k, long long budget) {
  return !find_induced_path(g, k, budget).has_value();
}

bool contains_induced(const Graph& g, const Graph& pattern, long long budget) {
  int hk = pattern.n();
  if (hk == 0) return true;
  if (hk > g.n()) return false;

  // Map pattern vertices in an order where each next vertex touches an
  // earlier one when possible; keeps the backtracking tight.
  std::vector<int> order;
  std::vector<char> placed(hk, 0);
  while (static_cast<int>(order.size()) < hk) {
    int pick = -1;
    for (int p = 0; p < hk && pick == -1; p++) {
      if (placed[p]) continue;
      for (int q : order) {
        if (pattern.has_edge(p, q)) {
          pick = p;
          break;
        }
      }
    }
    if (pick == -1) {
      for (int p = 0; p < hk; p++) {
        if (!placed[p]) {
          pick = p;
          break;
        }
      }
    }
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<int> image(hk, -1);
  VertexSet used(g.n());
  long long budget_left = budget;

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == hk) return true;
    int p = order[depth];
    for (int v = 0; v < g.n(); v++) {
      if (used.get(v)) continue;
      if (--budget_left < 0) throw BudgetExceeded("induced pattern search");
      bool ok = true;
      for (int d = 0; d < depth; d++) {
        int q = order[d];
        if (pattern.has_edge(p, q) != g.has_edge(v, image[q])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[p] = v;
      used.set(v);
      if (self(self, depth + 1)) return true;
      used.reset(v);
      image[p] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

Graph e_graph() {
  Graph g = path_graph(5);
  Graph e(6);
  for (auto [u, v] : g.edges()) e.add_edge(u, v);
  e.add_edge(2, 5);
  return e;
}

}  // namespace p6
