#pragma once

#include <vector>

#include "p6/graph.hpp"
#include "p6/rational.hpp"

namespace p6 {

// Parameters of a nuke: X is an (eta, tau)-nuke of G when
//   (1-2*eta)|V| <= tau <= (1-eta)|V|,  |X| <= eta|V|,  and
//   |C| + |X| <= tau for every component C of G-X.
// The canonical range is 0 < eta <= 0.1; eta is not clamped here so that
// boundary instances (e.g. eta = 1/9) can still be evaluated directly.
struct NukeParams {
  Rational eta{1, 10};
  long long tau = 0;
};

// Probability measure with explicit support; exact rational masses.
struct Measure {
  VertexSet support;
  std::vector<Rational> mass;  // indexed by vertex id, zero outside support

  static Measure uniform(const VertexSet& s);
  // All mass split over the two lowest-degree members of s (ties by id);
  // a single point mass when |s| = 1.
  static Measure lowest_degree_pair(const VertexSet& s, const Graph& g);

  Rational of_vertex(int v) const { return mass[v]; }
  Rational of(const VertexSet& a) const;
  bool sums_to_one() const;
};

bool is_nuke(const Graph& g, const VertexSet& x, const NukeParams& p);
bool is_nuke_within(const Graph& g, const VertexSet& within, const VertexSet& x, const NukeParams& p);

// Inclusion-wise minimal sub-nuke of x: repeated id-order passes removing any
// vertex whose removal keeps the nuke property, until a fixed point.
// Precondition: is_nuke(g, x, p).
VertexSet minimize_nuke(const Graph& g, const VertexSet& x, const NukeParams& p);
VertexSet minimize_nuke_within(const Graph& g, const VertexSet& within, const VertexSet& x, const NukeParams& p);

// Vertex maximizing |N(v) /\ y| (ties by smallest id) and that count.
std::pair<int, int> best_hitting_vertex(const Graph& g, const VertexSet& y);
std::pair<int, int> best_hitting_vertex_within(const Graph& g, const VertexSet& within, const VertexSet& y);

}  // namespace p6
