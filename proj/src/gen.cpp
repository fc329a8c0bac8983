#include "p6/gen.hpp"

#include <random>

#include "p6/errors.hpp"
#include "p6/pattern.hpp"

namespace p6 {

namespace {

// Unbiased draw from [0, span); mt19937_64 output is standard-fixed, so
// generated instances are byte-identical across platforms.
uint64_t bounded(std::mt19937_64& rng, uint64_t span) {
  uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % span;
}

bool coin(std::mt19937_64& rng, const Rational& p) {
  return bounded(rng, static_cast<uint64_t>(p.den)) < static_cast<uint64_t>(p.num);
}

}  // namespace

Graph gen_random_pkfree(int n, const Rational& p, int k, uint64_t seed, int max_repair) {
  assert(k >= 4 && p.num > 0 && p.num < p.den);
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (int u = 0; u < n; u++) {
    for (int v = u + 1; v < n; v++) {
      if (coin(rng, p)) g.add_edge(u, v);
    }
  }
  VertexSet alive = g.vertices();
  int repairs = 0;
  while (true) {
    auto sub = induced_subgraph(g, alive);
    auto witness = find_induced_path(sub.graph, k);
    if (!witness) break;
    if (repairs >= max_repair) throw GenerationFailed("p_k repair budget exhausted");
    alive.reset(sub.old_ids[(*witness)[(k - 1) / 2]]);
    repairs++;
  }
  Graph out = induced_subgraph(g, alive).graph;
  if (!is_pk_free(out, k)) throw GenerationFailed("repair left an induced path");  // re-verify
  return out;
}

namespace {

// Cotree expansion: returns vertex ids of the subtree, joining or uniting the
// two halves.
void cograph_rec(Graph& g, int lo, int hi, std::mt19937_64& rng) {
  int size = hi - lo;
  if (size <= 1) return;
  int split = 1 + static_cast<int>(bounded(rng, static_cast<uint64_t>(size - 1)));
  bool join = bounded(rng, 2) == 1;
  cograph_rec(g, lo, lo + split, rng);
  cograph_rec(g, lo + split, hi, rng);
  if (join) {
    for (int u = lo; u < lo + split; u++) {
      for (int v = lo + split; v < hi; v++) g.add_edge(u, v);
    }
  }
}

}  // namespace

Graph gen_cograph(int n, uint64_t seed) {
  assert(n >= 1);
  std::mt19937_64 rng(seed);
  Graph g(n);
  cograph_rec(g, 0, n, rng);
  return g;
}

NukeInstance gen_counterexample_nuke(int k) {
  assert(k >= 2);
  int n = k * (k + 1);
  Graph g(n);
  // A = [0, k); C_i occupies [k + i*k, k + (i+1)*k) with c_i its first vertex.
  for (int i = 0; i < k; i++) {
    for (int j = i + 1; j < k; j++) g.add_edge(i, j);
  }
  NukeInstance inst;
  inst.nuke = VertexSet(n);
  for (int i = 0; i < k; i++) {
    int base = k + i * k;
    for (int u = 0; u < k; u++) {
      for (int v = u + 1; v < k; v++) g.add_edge(base + u, base + v);
    }
    g.add_edge(base, i);  // c_i -- a_i
    inst.nuke.set(base);
  }
  inst.graph = g;
  long long lo = (8 * n + 9) / 10;  // ceil(0.8 n)
  long long hi = (9 * n) / 10;      // floor(0.9 n)
  long long tau = (85 * n + 99) / 100;
  inst.tau = std::max(lo, std::min(hi, tau));
  return inst;
}

SeparatorInstance gen_counterexample_separator(int k) {
  assert(k >= 2);
  int n = k * (k + 2);
  Graph g(n);
  // A = [0, k), B = [k, 2k), S_i occupies [2k + i*k, 2k + (i+1)*k).
  for (int i = 0; i < k; i++) {
    for (int j = i + 1; j < k; j++) {
      g.add_edge(i, j);
      g.add_edge(k + i, k + j);
    }
  }
  SeparatorInstance inst;
  inst.separator = VertexSet(n);
  for (int i = 0; i < k; i++) {
    int base = 2 * k + i * k;
    for (int u = 0; u < k; u++) {
      for (int v = u + 1; v < k; v++) g.add_edge(base + u, base + v);
      g.add_edge(base + u, i);      // every S_i vertex -- a_i
      g.add_edge(base + u, k + i);  // every S_i vertex -- b_i
      inst.separator.set(base + u);
    }
  }
  inst.graph = g;
  return inst;
}

WeightedGraph assign_weights(const Graph& g, long long lo, long long hi, uint64_t seed) {
  assert(lo <= hi);
  std::mt19937_64 rng(seed);
  std::vector<long long> w(g.n());
  uint64_t span = static_cast<uint64_t>(hi - lo + 1);
  for (int v = 0; v < g.n(); v++) w[v] = lo + static_cast<long long>(bounded(rng, span));
  return WeightedGraph(g, std::move(w));
}

}  // namespace p6
