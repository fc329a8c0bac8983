#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "p6/graph.hpp"
#include "p6/rational.hpp"

namespace p6 {

struct Measure;  // nuke.hpp

using FillEdges = std::vector<std::pair<int, int>>;
using EliminationOrder = std::vector<int>;  // first-eliminated first

// Tree over the maximal cliques of a minimal triangulation; doubles as a tree
// decomposition of the original graph.
struct CliqueTree {
  std::vector<VertexSet> bags;
  std::vector<std::pair<int, int>> tree_edges;
  int root = -1;

  std::vector<std::vector<int>> adjacency() const {
    std::vector<std::vector<int>> adj(bags.size());
    for (auto [a, b] : tree_edges) {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    return adj;
  }
};

// Perfect elimination ordering if chordal, nullopt otherwise.
std::optional<EliminationOrder> is_chordal(const Graph& g);
std::optional<EliminationOrder> is_chordal_within(const Graph& g, const VertexSet& within);

// MCS-M: inclusion-minimal fill whose addition makes the graph chordal, plus
// the elimination ordering that certifies it.
struct Triangulation {
  FillEdges fill;
  EliminationOrder order;
};
Triangulation minimal_triangulation_within(const Graph& g, const VertexSet& within);
FillEdges minimal_triangulation(const Graph& g);

CliqueTree clique_tree_within(const Graph& g, const VertexSet& within, const Triangulation& tri);
CliqueTree clique_tree(const Graph& g, const FillEdges& fill);

// First bag (in index order) whose removal leaves components of at most
// floor(|within|/2) vertices. Throws CentralBagNotFound on a broken tree.
int central_bag_within(const Graph& g, const VertexSet& within, const CliqueTree& t);
int central_bag(const Graph& g, const CliqueTree& t);

// Same with component mass mu(C) <= 1/2 for a probability measure mu.
int weighted_central_bag(const Graph& g, const CliqueTree& t, const Measure& mu);

// True iff G - s has at least two full components (components whose
// neighborhood covers all of s).
bool is_minimal_separator(const Graph& g, const VertexSet& s);
bool is_minimal_separator_within(const Graph& g, const VertexSet& within, const VertexSet& s);

// Both potential-maximal-clique conditions: every component neighborhood is a
// proper subset of omega, and every non-edge of omega is covered by a
// component.
bool is_pmc(const Graph& g, const VertexSet& omega);

// N(C) for each component C of G - omega; each entry is checked to be a
// minimal separator (StructureViolation otherwise).
std::vector<VertexSet> component_separators(const Graph& g, const VertexSet& omega);

}  // namespace p6
