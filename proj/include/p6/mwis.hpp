#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "p6/graph.hpp"
#include "p6/rational.hpp"

namespace p6 {

enum class SolveMode { robust, strict };

// Constants default to the values the analysis fixes: beta = 1/576,
// gamma = 0.1*beta, degree threshold 0.05*beta, eta = 0.1, tau = 0.8|V|.
// Correctness never depends on them (branching is exhaustive); they only
// steer which branching rule fires.
struct SolverConfig {
  Rational beta{1, 576};
  Rational gamma{1, 5760};
  Rational degree_factor{1, 11520};
  Rational eta{1, 10};
  Rational tau_factor{4, 5};
  SolveMode mode = SolveMode::robust;
  std::optional<long long> node_budget;

  struct NukeObserver {
    // alive is connected; y is the inclusion-minimal nuke about to be branched on.
    virtual void on_minimal_nuke(const Graph& g, const VertexSet& alive, const VertexSet& y, long long tau) = 0;
    virtual ~NukeObserver() = default;
  };
  NukeObserver* observer = nullptr;
};

struct SolveStats {
  long long findis_nodes = 0;
  long long findisnuke_nodes = 0;
  long long fallback_calls = 0;
  long long below_gamma_events = 0;
  int max_depth = 0;

  // runtime-claim accounting
  long long nuke_seed_events = 0;
  long long seed_rejected = 0;         // central bag failed the nuke check (off-regime input)
  long long smallpmc_violations = 0;   // |Omega| >= 0.05 |alive| at a seeding step
  long long nukedecrease_violations = 0;  // fallback with |alive| >= (8/9) n0 in a seeded phase
  long long nukedecrease_rounding = 0;    // same, but explained by ceil(tau): 9|alive| < 10 tau
  Rational min_hit_ratio{1};           // min observed |N(v) /\ Y| / |Y|
  bool hit_ratio_seen = false;

  // efficient-dominating-set solver counters (shared stats type)
  long long eds_branch_nodes = 0;
  long long eds_repair_branches = 0;
  long long eds_bad_vertex_branches = 0;
  long long eds_final_branches = 0;
  long long eds_shrink16_violations = 0;
  long long eds_shrink2_violations = 0;
  std::vector<int> eds_bag_states;

  void note_hit_ratio(int count, int y_size) {
    Rational r(count, y_size);
    if (!hit_ratio_seen || r < min_hit_ratio) min_hit_ratio = r;
    hit_ratio_seen = true;
  }
};

// Optimal weight independent set of G[alive]; exhaustive branching, so the
// result is exact on any input. alive is expected connected.
Solution find_is(const WeightedGraph& gw, const VertexSet& alive, const SolverConfig& cfg, SolveStats& stats);

// Nuke-phase procedure: falls back to find_is when x is not an (eta,tau)-nuke
// of G[alive], otherwise branches on the best hitting vertex of the minimal
// sub-nuke, passing tau and the restricted nuke to every sub-call.
Solution find_is_nuke(const WeightedGraph& gw, const VertexSet& alive, long long tau, const VertexSet& x,
                      const SolverConfig& cfg, SolveStats& stats);

std::pair<Solution, SolveStats> solve_mwis(const WeightedGraph& gw, const SolverConfig& cfg = {});

}  // namespace p6
