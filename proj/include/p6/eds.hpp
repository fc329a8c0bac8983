#pragma once

#include <optional>
#include <vector>

#include "p6/chordal.hpp"
#include "p6/graph.hpp"
#include "p6/mwis.hpp"
#include "p6/rational.hpp"

namespace p6 {

// DP state over a potential maximal clique omega: each omega vertex is mapped
// to the component of G-omega holding its unique dominator, to kOmega when
// the dominator lies inside omega, or to kBot when the vertex itself is in
// the solution.
inline constexpr int kBot = -1;
inline constexpr int kOmega = -2;

struct State {
  std::vector<int> assign;  // aligned with BagContext::omega_vertices
};

struct BagContext {
  VertexSet omega;
  std::vector<int> omega_vertices;      // ascending
  std::vector<VertexSet> components;    // components of G - omega, canonical order
  std::vector<int> comp_of;             // vertex -> component index, -1 inside omega
  std::vector<int> omega_pos;           // vertex -> index in omega_vertices, -1 outside
};
BagContext make_bag_context(const Graph& g, const VertexSet& omega);

struct StateFamily {
  BagContext ctx;
  std::vector<State> states;  // deduplicated, first-emission order
};

enum class EdsMode { strict, fallback };

struct EdsConfig {
  EdsMode mode = EdsMode::strict;
  int fallback_cap = 25;  // brute-force rescue size in fallback mode
  std::optional<long long> node_budget;
  Rational beta{1, 576};  // only the ceil(1/beta) cap on guessed omega vertices
};

// Branching state enumeration: a family such that every efficient dominating
// set of g has a consistent state. Throws StructureViolation when one of the
// structural guarantees (valid only on P6-free inputs) fails.
StateFamily enumerate_states(const Graph& g, const VertexSet& omega, const EdsConfig& cfg = {},
                             SolveStats* stats = nullptr);

// Literal consistency of a state with an efficient dominating set x.
bool state_consistent(const State& f, const BagContext& ctx, const VertexSet& x, const Graph& g);

// Y is a partial solution at a node with cone gamma_t and bag beta_t.
bool is_partial_solution(const Graph& g, const VertexSet& gamma_t, const VertexSet& beta_t, const VertexSet& y);

// Child-entry compatibility with a parent state (three-clause definition).
bool partially_consistent(const Graph& g, const BagContext& parent_ctx, const State& f, const VertexSet& beta_t,
                          const VertexSet& beta_child, const VertexSet& gamma_child, const VertexSet& yp);

struct EdsResult {
  std::optional<Solution> solution;  // nullopt = no efficient dominating set
  SolveStats stats;
};

EdsResult solve_eds(const WeightedGraph& gw, const EdsConfig& cfg = {});

}  // namespace p6
