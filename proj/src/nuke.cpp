#include "p6/nuke.hpp"

#include <cassert>

namespace p6 {

Measure Measure::uniform(const VertexSet& s) {
  Measure m;
  m.support = s;
  m.mass.assign(s.universe(), Rational(0));
  int k = s.count();
  assert(k > 0);
  for (int v : s) m.mass[v] = Rational(1, k);
  return m;
}

Measure Measure::lowest_degree_pair(const VertexSet& s, const Graph& g) {
  Measure m;
  m.support = VertexSet(s.universe());
  m.mass.assign(s.universe(), Rational(0));
  int a = -1, b = -1;
  for (int v : s) {
    if (a == -1 || g.degree(v) < g.degree(a)) {
      b = a;
      a = v;
    } else if (b == -1 || g.degree(v) < g.degree(b)) {
      b = v;
    }
  }
  assert(a != -1);
  if (b == -1) {
    m.support.set(a);
    m.mass[a] = Rational(1);
  } else {
    m.support.set(a);
    m.support.set(b);
    m.mass[a] = Rational(1, 2);
    m.mass[b] = Rational(1, 2);
  }
  return m;
}

Rational Measure::of(const VertexSet& a) const {
  Rational total(0);
  VertexSet hit = a & support;
  for (int v : hit) total = total + mass[v];
  return total;
}

bool Measure::sums_to_one() const {
  return of(support) == Rational(1);
}

bool is_nuke_within(const Graph& g, const VertexSet& within, const VertexSet& x, const NukeParams& p) {
  long long n = within.count();
  long long a = p.eta.num, b = p.eta.den;
  // (1-2*eta) n <= tau <= (1-eta) n, by cross multiplication
  if ((b - 2 * a) * n > b * p.tau) return false;
  if (b * p.tau > (b - a) * n) return false;
  // |X| <= eta n
  if (b * x.count() > a * n) return false;
  VertexSet rest = within - x;
  long long xc = x.count();
  for (const VertexSet& c : connected_components(g, rest)) {
    if (c.count() + xc > p.tau) return false;
  }
  return true;
}

bool is_nuke(const Graph& g, const VertexSet& x, const NukeParams& p) {
  return is_nuke_within(g, g.vertices(), x, p);
}

VertexSet minimize_nuke_within(const Graph& g, const VertexSet& within, const VertexSet& x, const NukeParams& p) {
  assert(is_nuke_within(g, within, x, p));
  VertexSet y = x;
  // Removals interact through component merging, so iterate to a fixed point.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : y) {
      VertexSet cand = y;
      cand.reset(v);
      if (is_nuke_within(g, within, cand, p)) {
        y = cand;
        changed = true;
      }
    }
  }
  return y;
}

VertexSet minimize_nuke(const Graph& g, const VertexSet& x, const NukeParams& p) {
  return minimize_nuke_within(g, g.vertices(), x, p);
}

std::pair<int, int> best_hitting_vertex_within(const Graph& g, const VertexSet& within, const VertexSet& y) {
  assert(!y.empty());
  int best = -1, best_count = -1;
  for (int v : within) {
    int c = g.neighbors(v).count_and(y);
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return {best, best_count};
}

std::pair<int, int> best_hitting_vertex(const Graph& g, const VertexSet& y) {
  return best_hitting_vertex_within(g, g.vertices(), y);
}

}  // namespace p6
