#pragma once

#include <string>
#include <vector>

#include "p6/graph.hpp"
#include "p6/nuke.hpp"
#include "p6/pattern.hpp"
#include "p6/rational.hpp"

namespace p6 {

// Outcome of one hitting check: the vertex whose neighborhood captures the
// most measure of the target set, against the configured bound.
struct HitReport {
  int best_vertex = -1;
  Rational best_mass{0};
  int target_set_size = 0;
  Rational bound{0};
  bool satisfied = false;

  std::string line(const std::string& tag) const;
};

inline const Rational kAlphaBound{1, 24};
inline const Rational kBetaBound{1, 576};
inline const Rational kGammaBound{1, 5760};  // 0.1 * beta

// mu must be supported inside s; s must be a minimal separator.
HitReport verify_hit_sep(const Graph& g, const VertexSet& s, const Measure& mu);
// g connected with >= 2 vertices; omega a potential maximal clique.
HitReport verify_hit_pmc(const Graph& g, const VertexSet& omega, const Measure& mu);
// x an inclusion-minimal (eta,tau)-nuke of connected g.
HitReport verify_hit_nuke(const Graph& g, const VertexSet& x, const NukeParams& p, const Measure& mu);

// One structural claim about a counterexample family: evaluated value vs the
// asserted one, or skipped with a note (pattern budget).
struct ClaimResult {
  std::string name;
  bool checked = false;
  bool ok = false;
  std::string detail;
};

struct CounterexampleReport {
  int k_nuke = 0;
  int k_sep = 0;
  long long tau = 0;
  std::vector<ClaimResult> claims;

  bool all_ok() const;
  // Throws StructureViolation naming the first violated claim.
  void require() const;
};

// Builds both counterexample families and evaluates the structural claims;
// pattern-freeness checks are skipped (with a note) when the budget runs out.
CounterexampleReport check_counterexamples(int k_nuke, int k_sep,
                                           long long pattern_budget = kDefaultPatternBudget);

}  // namespace p6
