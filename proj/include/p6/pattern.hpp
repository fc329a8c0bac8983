#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "p6/graph.hpp"

namespace p6 {

// Default node budget for pattern searches. Exceeding a budget raises
// BudgetExceeded; a search never reports a wrong answer on a partial scan.
inline constexpr long long kDefaultPatternBudget = 100'000'000;

// First induced path on exactly k vertices in deterministic DFS order, or
// nullopt if none exists.
std::optional<std::vector<int>> find_induced_path(const Graph& g, int k,
                                                  long long budget = kDefaultPatternBudget);

bool is_pk_free(const Graph& g, int k, long long budget = kDefaultPatternBudget);

// True iff some injective map V(pattern) -> V(g) preserves both adjacency and
// non-adjacency (induced containment). Pattern is expected small (<= 8).
bool contains_induced(const Graph& g, const Graph& pattern,
                      long long budget = kDefaultPatternBudget);

// P5 with an extra degree-1 vertex attached to the middle path vertex.
Graph e_graph();

}  // namespace p6
