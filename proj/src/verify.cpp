#include "p6/verify.hpp"

#include <sstream>

#include "p6/chordal.hpp"
#include "p6/errors.hpp"
#include "p6/gen.hpp"

namespace p6 {

std::string HitReport::line(const std::string& tag) const {
  std::ostringstream os;
  os << tag << " size=" << target_set_size << " best_vertex=" << best_vertex + 1
     << " best_mass=" << best_mass.str() << " bound=" << bound.str() << " satisfied=" << (satisfied ? 1 : 0);
  return os.str();
}

namespace {

HitReport best_hit(const Graph& g, const Measure& mu, const Rational& bound, int target_size) {
  HitReport r;
  r.target_set_size = target_size;
  r.bound = bound;
  for (int v = 0; v < g.n(); v++) {
    Rational m = mu.of(g.neighbors(v));
    if (r.best_vertex == -1 || m > r.best_mass) {
      r.best_vertex = v;
      r.best_mass = m;
    }
  }
  r.satisfied = r.best_mass >= bound;
  return r;
}

void require_measure_on(const Measure& mu, const VertexSet& target, const char* what) {
  if (!mu.support.is_subset_of(target)) throw PreconditionViolation(std::string(what) + ": measure not supported on target");
  if (!mu.sums_to_one()) throw PreconditionViolation(std::string(what) + ": measure does not sum to 1");
}

}  // namespace

HitReport verify_hit_sep(const Graph& g, const VertexSet& s, const Measure& mu) {
  if (!is_minimal_separator(g, s)) throw PreconditionViolation("verify_hit_sep: not a minimal separator");
  require_measure_on(mu, s, "verify_hit_sep");
  return best_hit(g, mu, kAlphaBound, s.count());
}

HitReport verify_hit_pmc(const Graph& g, const VertexSet& omega, const Measure& mu) {
  if (g.n() < 2 || !is_connected_within(g, g.vertices()))
    throw PreconditionViolation("verify_hit_pmc: graph must be connected with >= 2 vertices");
  if (!is_pmc(g, omega)) throw PreconditionViolation("verify_hit_pmc: not a potential maximal clique");
  require_measure_on(mu, omega, "verify_hit_pmc");
  return best_hit(g, mu, kBetaBound, omega.count());
}

HitReport verify_hit_nuke(const Graph& g, const VertexSet& x, const NukeParams& p, const Measure& mu) {
  if (g.n() < 2 || !is_connected_within(g, g.vertices()))
    throw PreconditionViolation("verify_hit_nuke: graph must be connected with >= 2 vertices");
  if (!is_nuke(g, x, p)) throw PreconditionViolation("verify_hit_nuke: not a nuke");
  for (int v : x) {
    VertexSet smaller = x;
    smaller.reset(v);
    if (is_nuke(g, smaller, p)) throw PreconditionViolation("verify_hit_nuke: nuke not inclusion-minimal");
  }
  require_measure_on(mu, x, "verify_hit_nuke");
  return best_hit(g, mu, kGammaBound, x.count());
}

bool CounterexampleReport::all_ok() const {
  for (const auto& c : claims) {
    if (c.checked && !c.ok) return false;
  }
  return true;
}

void CounterexampleReport::require() const {
  for (const auto& c : claims) {
    if (c.checked && !c.ok) throw StructureViolation("counterexample claim failed: " + c.name + " (" + c.detail + ")");
  }
}

CounterexampleReport check_counterexamples(int k_nuke, int k_sep, long long pattern_budget) {
  if (k_nuke < 2 || k_sep < 2) throw PreconditionViolation("check_counterexamples: k >= 2 required");
  CounterexampleReport rep;
  rep.k_nuke = k_nuke;
  rep.k_sep = k_sep;

  auto claim = [&](const std::string& name, bool ok, const std::string& detail) {
    rep.claims.push_back({name, true, ok, detail});
  };
  auto pattern_claim = [&](const std::string& name, auto&& check) {
    try {
      bool ok = check();
      rep.claims.push_back({name, true, ok, ok ? "verified" : "violated"});
    } catch (const BudgetExceeded&) {
      rep.claims.push_back({name, false, false, "skipped: pattern budget"});
    }
  };

  // Left panel: k+1 cliques with distinguished vertices bridged into A.
  {
    NukeInstance inst = gen_counterexample_nuke(k_nuke);
    const Graph& g = inst.graph;
    rep.tau = inst.tau;
    int max_adj = 0;
    for (int v = 0; v < g.n(); v++) max_adj = std::max(max_adj, g.neighbors(v).count_and(inst.nuke));
    claim("left:max-nuke-adjacency", max_adj == 1, "max |N(v) /\\ X| = " + std::to_string(max_adj));

    NukeParams p{Rational(1, 10), inst.tau};
    bool nuke_ok = is_nuke(g, inst.nuke, p);
    std::ostringstream d;
    d << "n=" << g.n() << " |X|=" << inst.nuke.count() << " tau=" << inst.tau
      << " eta=1/10 (|X| <= eta*n needs " << inst.nuke.count() * 10 << " <= " << g.n() << ")";
    claim("left:nuke", nuke_ok, d.str());

    pattern_claim("left:p6-present", [&] { return !is_pk_free(g, 6, pattern_budget); });
    pattern_claim("left:p7-free", [&] { return is_pk_free(g, 7, pattern_budget); });
  }

  // Right panel: k+2 cliques, S_i fully adjacent to private a_i and b_i.
  {
    SeparatorInstance inst = gen_counterexample_separator(k_sep);
    const Graph& g = inst.graph;
    claim("right:separator-size", inst.separator.count() == k_sep * k_sep,
          "|S| = " + std::to_string(inst.separator.count()));
    claim("right:minimal-separator", is_minimal_separator(g, inst.separator), "full-component check");
    int max_adj = 0;
    for (int v = 0; v < g.n(); v++) max_adj = std::max(max_adj, g.neighbors(v).count_and(inst.separator));
    claim("right:max-separator-adjacency", max_adj == k_sep, "max |N(v) /\\ S| = " + std::to_string(max_adj));

    pattern_claim("right:p8-free", [&] { return is_pk_free(g, 8, pattern_budget); });
    pattern_claim("right:e-graph-free", [&] { return !contains_induced(g, e_graph(), pattern_budget); });
  }

  return rep;
}

}  // namespace p6
