#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "p6/graph.hpp"

namespace p6 {

// Brute-force references. These are deliberately structured differently from
// the main solvers (subset scans and plain backtracking) so that agreement is
// evidence rather than tautology.
namespace oracle {

struct Limits {
  int mwis = 30;
  int eds = 25;
  int separators = 16;
  int pmcs = 16;
  int induced_path = 12;
};

// Maximum-degree include/exclude branching; no component splitting, no class
// assumptions.
Solution mwis_bruteforce(const WeightedGraph& gw, const Limits& lim = {});

struct EdsReference {
  std::optional<Solution> best;
  int cardinality = -1;  // common cardinality of all efficient dominating sets
};
EdsReference eds_bruteforce(const WeightedGraph& gw, const Limits& lim = {});

// Every efficient dominating set, in deterministic order.
std::vector<VertexSet> eds_enumerate(const Graph& g, const Limits& lim = {});

std::vector<VertexSet> minimal_separators_bruteforce(const Graph& g, const Limits& lim = {});
std::vector<VertexSet> pmcs_bruteforce(const Graph& g, const Limits& lim = {});

// Subset scan: some k-subset induces a path.
bool induced_path_bruteforce(const Graph& g, int k, const Limits& lim = {});

}  // namespace oracle

bool is_efficient_dominating_set(const Graph& g, const VertexSet& s);

}  // namespace p6
