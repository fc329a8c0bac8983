#include "p6/eds.hpp"

#include <algorithm>
#include <set>

#include "p6/errors.hpp"
#include "p6/oracle.hpp"

namespace p6 {

BagContext make_bag_context(const Graph& g, const VertexSet& omega) {
  BagContext ctx;
  ctx.omega = omega;
  ctx.omega_vertices = omega.to_vector();
  ctx.components = connected_components(g, g.vertices() - omega);
  ctx.comp_of.assign(g.n(), -1);
  for (size_t c = 0; c < ctx.components.size(); c++) {
    for (int v : ctx.components[c]) ctx.comp_of[v] = static_cast<int>(c);
  }
  ctx.omega_pos.assign(g.n(), -1);
  for (size_t i = 0; i < ctx.omega_vertices.size(); i++) ctx.omega_pos[ctx.omega_vertices[i]] = static_cast<int>(i);
  return ctx;
}

namespace {

class StateEnumerator {
 public:
  StateEnumerator(const Graph& g, const BagContext& ctx, const EdsConfig& cfg, SolveStats* stats)
      : g_(g), ctx_(ctx), cfg_(cfg), stats_(stats), closed_(g.n()), second_(g.n()) {
    for (int v = 0; v < g_.n(); v++) {
      closed_[v] = closed_neighborhood(g_, v);
      second_[v] = second_closed_neighborhood(g_, v);
    }
  }

  std::vector<State> run() {
    // Guess the solution vertices inside omega: subsets of pairwise distance
    // >= 3, capped at ceil(1/beta).
    long long cap = (cfg_.beta.den + cfg_.beta.num - 1) / cfg_.beta.num;
    std::vector<int> chosen;
    enumerate_root(0, cap, chosen);
    return std::move(out_);
  }

 private:
  struct Node {
    VertexSet x0, y, a, b;
  };

  void enumerate_root(size_t idx, long long cap, std::vector<int>& chosen) {
    if (idx == ctx_.omega_vertices.size()) {
      charge();
      VertexSet x0(g_.n());
      VertexSet y = g_.vertices() - ctx_.omega;
      for (int v : chosen) x0.set(v);
      auto node = prepare(x0, y);
      if (node) recurse(*node, 0);
      return;
    }
    enumerate_root(idx + 1, cap, chosen);
    int v = ctx_.omega_vertices[idx];
    if (static_cast<long long>(chosen.size()) >= cap) return;
    for (int u : chosen) {
      if (second_[u].get(v)) return;  // taking v would violate the distance bound
    }
    chosen.push_back(v);
    enumerate_root(idx + 1, cap, chosen);
    chosen.pop_back();
  }

  // Normalize-and-validate plus exhaustive Reduction Rule; nullopt when the
  // label cannot extend to any efficient dominating set.
  std::optional<Node> prepare(VertexSet x0, VertexSet y) {
    if (!pairwise_distance_at_least(g_, x0, 3)) return std::nullopt;
    for (int v : x0) y -= second_[v];
    while (true) {
      VertexSet dominated_from = x0 | y;
      for (int v = 0; v < g_.n(); v++) {
        if (!closed_[v].intersects(dominated_from)) return std::nullopt;  // v cannot be dominated
      }
      VertexSet a = ctx_.omega;
      for (int v : x0) a -= closed_[v];
      VertexSet b = compute_b(a, y);
      bool applied = false;
      for (int v : b) {
        VertexSet yn = g_.neighbors(v) & y;
        for (int u : yn) {
          if ((closed_[u] & y).is_subset_of(g_.neighbors(v))) {
            // v's dominator is pinned to C(u): drop v's other neighbors
            y -= g_.neighbors(v) - ctx_.components[ctx_.comp_of[u]];
            applied = true;
            break;
          }
        }
        if (applied) break;
      }
      if (!applied) return Node{x0, y, a, b};
    }
  }

  VertexSet compute_b(const VertexSet& a, const VertexSet& y) const {
    VertexSet b(g_.n());
    for (int v : a) {
      VertexSet yn = g_.neighbors(v) & y;
      int spanned = 0;
      for (const VertexSet& c : ctx_.components) {
        if (yn.intersects(c) && ++spanned >= 2) break;
      }
      if (spanned >= 2) b.set(v);
    }
    return b;
  }

  void charge() {
    if (!stats_) return;
    stats_->eds_branch_nodes++;
    if (cfg_.node_budget && stats_->eds_branch_nodes > *cfg_.node_budget)
      throw BudgetExceeded("eds state enumeration budget");
  }

  void recurse(const Node& node, int depth) {
    charge();
    if (node.b.empty()) {
      emit(node);
      return;
    }

    // Chain of active components by B-neighborhood inclusion.
    std::vector<int> active;
    std::vector<VertexSet> nb;
    nb.reserve(ctx_.components.size());
    for (size_t c = 0; c < ctx_.components.size(); c++) {
      nb.push_back(open_neighborhood(g_, ctx_.components[c]) & node.b);
      if (ctx_.components[c].intersects(node.y)) active.push_back(static_cast<int>(c));
    }
    std::stable_sort(active.begin(), active.end(),
                     [&](int i, int j) { return nb[i].count() > nb[j].count(); });
    if (active.size() < 2) throw StructureViolation("not P6-free: B nonempty with fewer than two active components");
    if (!(nb[active[0]] == node.b) || !(nb[active[1]] == node.b))
      throw StructureViolation("not P6-free: top active components do not cover B");
    for (size_t i = 2; i < active.size(); i++) {
      if (!nb[active[i]].is_subset_of(nb[active[i - 1]]))
        throw StructureViolation("not P6-free: active component neighborhoods do not form a chain");
    }

    const VertexSet& comp1 = ctx_.components[active[0]];
    const VertexSet& comp2 = ctx_.components[active[1]];
    VertexSet n1 = open_neighborhood(g_, comp1);
    VertexSet n2 = open_neighborhood(g_, comp2);
    if (ctx_.omega.is_subset_of(n1 | n2)) {
      if (stats_) stats_->eds_repair_branches++;
      repair_linkedness(node, active[0], active[1], n1, n2, depth);
      return;
    }

    // Y1 = high B-degree candidates; Y1* = those whose guess clears B.
    VertexSet y1(g_.n());
    int bsz = node.b.count();
    for (int u : node.y) {
      if (16 * g_.neighbors(u).count_and(node.b) >= bsz) y1.set(u);
    }
    VertexSet y1star(g_.n());
    int bad = -1;
    VertexSet bad_bcirc(g_.n());
    for (int u : y1) {
      VertexSet xu = node.x0;
      xu.set(u);
      auto sim = prepare(xu, node.y);
      if (!sim || sim->b.empty()) {
        y1star.set(u);
      } else if (bad == -1) {
        bad = u;
        bad_bcirc = sim->b;
      }
    }

    if (bad != -1) {
      if (stats_) stats_->eds_bad_vertex_branches++;
      branch_on_bad_vertex(node, bad, bad_bcirc, bsz, depth);
      return;
    }
    if (y1.empty()) throw StructureViolation("not P6-free: empty Y1 with nonempty B");
    if (stats_) stats_->eds_final_branches++;

    // Final branch: either the solution avoids Y1* entirely, or one of its
    // members is in the solution (which empties B by construction).
    {
      auto child = prepare(node.x0, node.y - y1);
      if (child) {
        if (stats_ && 2 * child->b.count() > bsz) stats_->eds_shrink2_violations++;
        recurse(*child, depth + 1);
      }
    }
    for (int u : y1star) {
      VertexSet xu = node.x0;
      xu.set(u);
      auto child = prepare(xu, node.y);
      if (child) recurse(*child, depth + 1);
    }
  }

  void repair_linkedness(const Node& node, int c1, int c2, const VertexSet& n1, const VertexSet& n2, int depth) {
    int side = -1;
    VertexSet d1 = ctx_.omega - n2;
    for (int v : d1) {
      if (ctx_.components[c1].is_subset_of(g_.neighbors(v))) {
        side = c1;
        break;
      }
    }
    if (side == -1) {
      VertexSet d2 = ctx_.omega - n1;
      for (int v : d2) {
        if (ctx_.components[c2].is_subset_of(g_.neighbors(v))) {
          side = c2;
          break;
        }
      }
    }
    if (side == -1) throw StructureViolation("not P6-free: no vertex fully adjacent to a top component");
    const VertexSet& comp = ctx_.components[side];
    if (node.x0.intersects(comp)) return;  // decided vertex inside: no consistent solution remains
    VertexSet ys = node.y & comp;
    for (int u : ys) {
      VertexSet xu = node.x0;
      xu.set(u);
      auto child = prepare(xu, node.y - ys);
      if (child) recurse(*child, depth + 1);
    }
  }

  void branch_on_bad_vertex(const Node& node, int y, const VertexSet& bcirc, int bsz, int depth) {
    const VertexSet& comp_y = ctx_.components[ctx_.comp_of[y]];
    VertexSet nb_y = g_.neighbors(y) & node.b;
    // The two-way branch is sound only if every candidate dominator of y
    // covers N_B(y) or B-circ. The dichotomy is a P6-free consequence; verify
    // it outright so the pruning below never drops a solution silently.
    for (int z : closed_[y] & node.y) {
      if (!nb_y.is_subset_of(g_.neighbors(z)) && !bcirc.is_subset_of(g_.neighbors(z)))
        throw StructureViolation("not P6-free: bad-vertex dominator dichotomy fails");
    }
    // The dominator of y covers N_B(y) or B-circ; prune Y accordingly.
    VertexSet rem1(g_.n());
    for (int v : nb_y) rem1 |= g_.neighbors(v);
    rem1 -= comp_y;
    VertexSet rem2(g_.n());
    for (int q : bcirc) rem2 |= g_.neighbors(q);
    rem2 -= comp_y;
    for (const VertexSet* rem : {&rem1, &rem2}) {
      VertexSet yn = node.y - *rem;
      if (yn == node.y) throw StructureViolation("not P6-free: bad-vertex branch made no progress");
      auto child = prepare(node.x0, yn);
      if (child) {
        if (stats_ && 16 * child->b.count() > 15 * bsz) stats_->eds_shrink16_violations++;
        recurse(*child, depth + 1);
      }
    }
  }

  void emit(const Node& node) {
    State f;
    f.assign.reserve(ctx_.omega_vertices.size());
    for (int v : ctx_.omega_vertices) {
      if (node.x0.get(v)) {
        f.assign.push_back(kBot);
        continue;
      }
      VertexSet dom = g_.neighbors(v) & node.x0;
      if (!dom.empty()) {
        int x = dom.first();
        assert(dom.count() == 1);
        f.assign.push_back(ctx_.omega.get(x) ? kOmega : ctx_.comp_of[x]);
        continue;
      }
      VertexSet yn = g_.neighbors(v) & node.y;
      assert(!yn.empty());
      f.assign.push_back(ctx_.comp_of[yn.first()]);
    }
    if (seen_.insert(f.assign).second) out_.push_back(std::move(f));
  }

  const Graph& g_;
  const BagContext& ctx_;
  const EdsConfig& cfg_;
  SolveStats* stats_;
  std::vector<VertexSet> closed_, second_;
  std::set<std::vector<int>> seen_;
  std::vector<State> out_;
};

}  // namespace

StateFamily enumerate_states(const Graph& g, const VertexSet& omega, const EdsConfig& cfg, SolveStats* stats) {
  if (!is_pmc(g, omega)) throw PreconditionViolation("enumerate_states: omega is not a potential maximal clique");
  StateFamily fam;
  fam.ctx = make_bag_context(g, omega);
  StateEnumerator e(g, fam.ctx, cfg, stats);
  fam.states = e.run();
  if (stats) stats->eds_bag_states.push_back(static_cast<int>(fam.states.size()));
  return fam;
}

bool state_consistent(const State& f, const BagContext& ctx, const VertexSet& x, const Graph& g) {
  if (!is_efficient_dominating_set(g, x)) throw PreconditionViolation("state_consistent: x is not an eds");
  for (size_t i = 0; i < ctx.omega_vertices.size(); i++) {
    int v = ctx.omega_vertices[i];
    if (x.get(v) != (f.assign[i] == kBot)) return false;
    if (x.get(v)) continue;
    VertexSet dom = g.neighbors(v) & x;
    assert(dom.count() == 1);
    int u = dom.first();
    int want = ctx.omega.get(u) ? kOmega : ctx.comp_of[u];
    if (f.assign[i] != want) return false;
  }
  return true;
}

bool is_partial_solution(const Graph& g, const VertexSet& gamma_t, const VertexSet& beta_t, const VertexSet& y) {
  assert(y.is_subset_of(gamma_t));
  VertexSet seen(g.n());
  for (int u : y) {
    VertexSet cn = closed_neighborhood(g, u);
    if (cn.intersects(seen)) return false;
    seen |= cn;
  }
  return (gamma_t - beta_t).is_subset_of(seen);
}

namespace {

// Shared clause evaluation: every bag vertex seen by yp must be dominated
// inside f(v); undominated bag vertices must have f(v) pointing away from the
// processed cone (or be deferred: kOmega / kBot handled per caller flags).
bool domination_clause(const Graph& g, const BagContext& ctx, const State& f, const VertexSet& beta_t,
                       const VertexSet& yp, int v) {
  int pos = ctx.omega_pos[v];
  assert(pos >= 0);
  int code = f.assign[pos];
  VertexSet dom = g.neighbors(v) & yp;
  assert(!dom.empty());
  int u = dom.first();
  if (code == kBot) return false;
  if (code == kOmega) return beta_t.get(u);
  return ctx.components[code].get(u);
}

}  // namespace

bool partially_consistent(const Graph& g, const BagContext& ctx, const State& f, const VertexSet& beta_t,
                          const VertexSet& beta_child, const VertexSet& gamma_child, const VertexSet& yp) {
  // (1) agreement on the shared bag
  VertexSet f_bot(g.n());
  for (size_t i = 0; i < ctx.omega_vertices.size(); i++) {
    if (f.assign[i] == kBot) f_bot.set(ctx.omega_vertices[i]);
  }
  if (!((yp & beta_t & beta_child) == (f_bot & beta_child))) return false;
  // (2)+(3)
  VertexSet open_n = open_neighborhood(g, yp);
  VertexSet closed_n = open_n | yp;
  for (int v : beta_t) {
    if (open_n.get(v)) {
      if (!domination_clause(g, ctx, f, beta_t, yp, v)) return false;
    } else if (!closed_n.get(v)) {
      int code = f.assign[ctx.omega_pos[v]];
      if (code == kOmega || code == kBot) continue;  // resolved at the parent node
      if (ctx.components[code].intersects(gamma_child)) return false;
    }
  }
  return true;
}

namespace {

// Full consistency of an assembled entry with its state: as the partial
// variant but nothing may be deferred past this node's own cone.
bool consistent_with_state(const Graph& g, const BagContext& ctx, const State& f, const VertexSet& beta_t,
                           const VertexSet& gamma_t, const VertexSet& y) {
  VertexSet f_bot(g.n());
  for (size_t i = 0; i < ctx.omega_vertices.size(); i++) {
    if (f.assign[i] == kBot) f_bot.set(ctx.omega_vertices[i]);
  }
  if (!((y & beta_t) == f_bot)) return false;
  VertexSet open_n = open_neighborhood(g, y);
  VertexSet closed_n = open_n | y;
  for (int v : beta_t) {
    if (open_n.get(v)) {
      if (!domination_clause(g, ctx, f, beta_t, y, v)) return false;
    } else if (!closed_n.get(v)) {
      int code = f.assign[ctx.omega_pos[v]];
      if (code == kOmega || code == kBot) return false;
      if (ctx.components[code].intersects(gamma_t)) return false;
    }
  }
  return true;
}

struct DpNode {
  VertexSet beta, gamma;
  std::vector<int> children;
};

std::optional<Solution> solve_component(const WeightedGraph& gw, const EdsConfig& cfg, SolveStats& stats) {
  const Graph& g = gw.graph;
  if (g.n() == 0) return Solution{0, VertexSet(0)};

  Triangulation tri = minimal_triangulation_within(g, g.vertices());
  CliqueTree tree = clique_tree_within(g, g.vertices(), tri);
  int nb = static_cast<int>(tree.bags.size());
  auto adj = tree.adjacency();

  // root at bag 0, orient, and order bottom-up
  std::vector<int> order, parent(nb, -1);
  std::vector<DpNode> nodes(nb);
  {
    std::vector<int> stack{0};
    std::vector<char> seen(nb, 0);
    seen[0] = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      order.push_back(t);
      for (int c : adj[t]) {
        if (!seen[c]) {
          seen[c] = 1;
          parent[c] = t;
          nodes[t].children.push_back(c);
          stack.push_back(c);
        }
      }
    }
    std::reverse(order.begin(), order.end());  // children before parents
    for (auto& n : nodes) std::sort(n.children.begin(), n.children.end());
  }
  for (int t = 0; t < nb; t++) nodes[t].beta = tree.bags[t];
  for (int t : order) {
    nodes[t].gamma = nodes[t].beta;
    for (int c : nodes[t].children) nodes[t].gamma |= nodes[c].gamma;
  }

  std::vector<StateFamily> fam(nb);
  std::vector<std::vector<std::optional<Solution>>> table(nb);
  for (int t : order) {
    fam[t] = enumerate_states(g, nodes[t].beta, cfg, &stats);
    table[t].assign(fam[t].states.size(), std::nullopt);
    for (size_t fi = 0; fi < fam[t].states.size(); fi++) {
      const State& f = fam[t].states[fi];
      VertexSet y(g.n());
      for (size_t i = 0; i < fam[t].ctx.omega_vertices.size(); i++) {
        if (f.assign[i] == kBot) y.set(fam[t].ctx.omega_vertices[i]);
      }
      bool ok = true;
      for (int c : nodes[t].children) {
        int best = -1;
        long long best_w = 0;
        for (size_t fj = 0; fj < fam[c].states.size(); fj++) {
          if (!table[c][fj]) continue;
          if (!partially_consistent(g, fam[t].ctx, f, nodes[t].beta, nodes[c].beta, nodes[c].gamma,
                                    table[c][fj]->chosen))
            continue;
          if (best == -1 || table[c][fj]->weight > best_w) {
            best = static_cast<int>(fj);
            best_w = table[c][fj]->weight;
          }
        }
        if (best == -1) {
          ok = false;
          break;
        }
        y |= table[c][best]->chosen;
      }
      if (!ok) continue;
      if (!is_partial_solution(g, nodes[t].gamma, nodes[t].beta, y)) continue;
      if (!consistent_with_state(g, fam[t].ctx, f, nodes[t].beta, nodes[t].gamma, y)) continue;
      table[t][fi] = Solution{weight_of(gw, y), y};
    }
  }

  int root = tree.root;
  std::optional<Solution> best;
  for (const auto& entry : table[root]) {
    if (entry && (!best || entry->weight > best->weight)) best = entry;
  }
  return best;
}

}  // namespace

EdsResult solve_eds(const WeightedGraph& gw, const EdsConfig& cfg) {
  EdsResult res;
  Solution total{0, VertexSet(gw.graph.n())};
  for (const VertexSet& comp : connected_components(gw.graph, gw.graph.vertices())) {
    auto sub = induced_subgraph(gw.graph, comp);
    std::vector<long long> w(sub.graph.n());
    for (int i = 0; i < sub.graph.n(); i++) w[i] = gw.weights[sub.old_ids[i]];
    WeightedGraph sgw(sub.graph, std::move(w));

    std::optional<Solution> local;
    try {
      local = solve_component(sgw, cfg, res.stats);
    } catch (const StructureViolation&) {
      if (cfg.mode == EdsMode::fallback && sgw.graph.n() <= cfg.fallback_cap) {
        oracle::Limits lim;
        lim.eds = cfg.fallback_cap;
        auto ref = oracle::eds_bruteforce(sgw, lim);
        local = ref.best;
      } else {
        throw;
      }
    }
    if (!local) return res;  // some component has no efficient dominating set
    for (int v : local->chosen) total.chosen.set(sub.old_ids[v]);
    total.weight += local->weight;
  }
  assert(gw.graph.n() == 0 || is_efficient_dominating_set(gw.graph, total.chosen));
  res.solution = total;
  return res;
}

}  // namespace p6
