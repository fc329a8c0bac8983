#include "p6/mwis.hpp"

#include <stdexcept>

#include "p6/chordal.hpp"
#include "p6/errors.hpp"
#include "p6/nuke.hpp"

namespace p6 {

namespace {

class MwisSolver {
 public:
  MwisSolver(const WeightedGraph& gw, const SolverConfig& cfg, SolveStats& stats)
      : gw_(gw), g_(gw.graph), cfg_(cfg), stats_(stats) {}

  Solution find_is(const VertexSet& alive, int depth) {
    charge(stats_.findis_nodes, depth);
    int cnt = alive.count();
    if (cnt == 0) return {0, VertexSet(g_.n())};
    if (cnt == 1) {
      int v = alive.first();
      Solution s{gw_.weights[v], VertexSet(g_.n())};
      s.chosen.set(v);
      return s;
    }

    auto [v, deg] = max_degree_vertex(alive);
    // high-degree branch: deg >= degree_factor * |alive|
    if (static_cast<long long>(deg) * cfg_.degree_factor.den >= cfg_.degree_factor.num * cnt) {
      return branch(alive, v, depth, nullptr);
    }

    // nuke seeding: central bag of a minimal triangulation of G[alive]
    Triangulation tri = minimal_triangulation_within(g_, alive);
    CliqueTree tree = clique_tree_within(g_, alive, tri);
    int bag = central_bag_within(g_, alive, tree);
    const VertexSet& omega = tree.bags[bag];
    long long tau = ceil_mul(cfg_.tau_factor, cnt);
    if (is_nuke_within(g_, alive, omega, {cfg_.eta, tau})) {
      stats_.nuke_seed_events++;
      if (!(20 * omega.count() < cnt)) stats_.smallpmc_violations++;  // |Omega| < 0.05|alive|
      return find_is_nuke(alive, tau, omega, cnt, true, depth + 1);
    }
    // Central bag does not qualify (possible only off the analyzed regime);
    // plain branching keeps the procedure exact and terminating.
    stats_.seed_rejected++;
    return branch(alive, v, depth, nullptr);
  }

  struct NukePhase {
    long long tau;
    long long n0;
    bool seeded;
  };

  Solution find_is_nuke(const VertexSet& alive, long long tau, const VertexSet& x, long long phase_n0, bool seeded,
                        int depth) {
    charge(stats_.findisnuke_nodes, depth);
    int cnt = alive.count();
    if (cnt < 2 || !is_nuke_within(g_, alive, x, {cfg_.eta, tau})) {
      stats_.fallback_calls++;
      if (seeded && 9 * cnt >= 8 * phase_n0) {
        // the 8/9 bound assumes un-rounded tau = 0.8 n0; with tau = ceil(...)
        // the integer form of the window inequality is 9|alive| < 10 tau
        if (9 * cnt < 10 * tau) {
          stats_.nukedecrease_rounding++;
        } else {
          stats_.nukedecrease_violations++;
        }
      }
      return find_is(alive, depth);
    }
    VertexSet y = minimize_nuke_within(g_, alive, x, {cfg_.eta, tau});
    if (cfg_.observer) cfg_.observer->on_minimal_nuke(g_, alive, y, tau);
    auto [v, hit] = best_hitting_vertex_within(g_, alive, y);
    int ysz = y.count();
    stats_.note_hit_ratio(hit, ysz);
    if (static_cast<long long>(hit) * cfg_.gamma.den < cfg_.gamma.num * ysz) {
      stats_.below_gamma_events++;
      if (cfg_.mode == SolveMode::strict)
        throw StructureViolation("not P6-free: hitting vertex below gamma on a minimal nuke");
    }
    NukePhase phase{tau, phase_n0, seeded};
    return branch(alive, v, depth, &phase, &y);
  }

 private:
  // Exclude-branch then include-branch on v, recursing per connected
  // component; inside a nuke phase the sub-calls keep tau and receive the
  // nuke restricted to their component.
  Solution branch(const VertexSet& alive, int v, int depth, const NukePhase* phase, const VertexSet* y = nullptr) {
    VertexSet without = alive;
    without.reset(v);
    Solution excl = solve_parts(without, depth, phase, y);
    Solution incl = solve_parts(alive - closed_neighborhood(g_, v), depth, phase, y);
    incl.weight += gw_.weights[v];
    incl.chosen.set(v);
    return incl.weight > excl.weight ? incl : excl;
  }

  Solution solve_parts(const VertexSet& rest, int depth, const NukePhase* phase, const VertexSet* y) {
    Solution total{0, VertexSet(g_.n())};
    for (const VertexSet& comp : connected_components(g_, rest)) {
      Solution part = phase ? find_is_nuke(comp, phase->tau, *y & comp, phase->n0, phase->seeded, depth + 1)
                            : find_is(comp, depth + 1);
      total.weight += part.weight;
      total.chosen |= part.chosen;
    }
    return total;
  }

  std::pair<int, int> max_degree_vertex(const VertexSet& alive) const {
    int best = -1, best_deg = -1;
    for (int u : alive) {
      int d = g_.neighbors(u).count_and(alive);
      if (d > best_deg) {
        best = u;
        best_deg = d;
      }
    }
    return {best, best_deg};
  }

  void charge(long long& counter, int depth) {
    counter++;
    if (depth > stats_.max_depth) stats_.max_depth = depth;
    if (cfg_.node_budget && stats_.findis_nodes + stats_.findisnuke_nodes > *cfg_.node_budget)
      throw BudgetExceeded("mwis node budget");
  }

  const WeightedGraph& gw_;
  const Graph& g_;
  const SolverConfig& cfg_;
  SolveStats& stats_;
};

void require_nonnegative(const WeightedGraph& gw) {
  for (long long w : gw.weights) {
    if (w < 0) throw std::invalid_argument("mwis requires non-negative weights");
  }
}

}  // namespace

Solution find_is(const WeightedGraph& gw, const VertexSet& alive, const SolverConfig& cfg, SolveStats& stats) {
  require_nonnegative(gw);
  MwisSolver s(gw, cfg, stats);
  return s.find_is(alive, 0);
}

Solution find_is_nuke(const WeightedGraph& gw, const VertexSet& alive, long long tau, const VertexSet& x,
                      const SolverConfig& cfg, SolveStats& stats) {
  require_nonnegative(gw);
  MwisSolver s(gw, cfg, stats);
  return s.find_is_nuke(alive, tau, x, alive.count(), false, 0);
}

std::pair<Solution, SolveStats> solve_mwis(const WeightedGraph& gw, const SolverConfig& cfg) {
  require_nonnegative(gw);
  SolveStats stats;
  MwisSolver s(gw, cfg, stats);
  Solution total{0, VertexSet(gw.graph.n())};
  for (const VertexSet& comp : connected_components(gw.graph, gw.graph.vertices())) {
    Solution part = s.find_is(comp, 0);
    total.weight += part.weight;
    total.chosen |= part.chosen;
  }
  return {total, stats};
}

}  // namespace p6
