#pragma once

#include <cstdint>

#include "p6/graph.hpp"
#include "p6/rational.hpp"

namespace p6 {

// G(n,p) sampled then repaired by deleting the middle vertex of any induced
// P_k witness, up to max_repair deletions; the result is re-verified P_k-free
// before being returned. All randomness flows through the explicit seed.
Graph gen_random_pkfree(int n, const Rational& p, int k, uint64_t seed, int max_repair);

// Random cotree (union/join over a random binary split) expanded to a graph;
// P4-free by construction.
Graph gen_cograph(int n, uint64_t seed);

struct NukeInstance {
  Graph graph;
  VertexSet nuke;     // the distinguished vertices c_1..c_k
  long long tau = 0;  // ceil(0.85 n) clamped into [ceil(0.8 n), floor(0.9 n)]
};
// k+1 cliques A, C_1..C_k on k vertices each; c_i in C_i bridged to a private
// a_i in A. n = k(k+1).
NukeInstance gen_counterexample_nuke(int k);

struct SeparatorInstance {
  Graph graph;
  VertexSet separator;  // the union of the S_i, size k^2
};
// k+2 cliques A, B, S_1..S_k on k vertices each; every vertex of S_i adjacent
// to a private a_i in A and b_i in B. n = k(k+2).
SeparatorInstance gen_counterexample_separator(int k);

WeightedGraph assign_weights(const Graph& g, long long lo, long long hi, uint64_t seed);

}  // namespace p6
