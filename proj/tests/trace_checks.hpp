#pragma once

// Replays algorithm traces and outputs against the input digraph and
// re-checks every step with naive predicates.

#include <algorithm>
#include <string>

#include "dicut/color_cut.hpp"
#include "dicut/d11_cut.hpp"
#include "dicut/decompose.hpp"
#include "dicut/peel.hpp"
#include "dicut/digraph.hpp"
#include "support.hpp"

namespace dicut::testing {

// No vertex is both a head and a tail in s.
inline bool naive_cut_compatible(const EdgeSet& s) {
  for (const Edge& a : s) {
    for (const Edge& b : s) {
      if (a.head == b.tail) return false;
    }
  }
  return true;
}

inline bool subset_of(const EdgeSet& a, const EdgeSet& b) {
  return std::all_of(a.begin(), a.end(), [&](const Edge& e) { return std::find(b.begin(), b.end(), e) != b.end(); });
}

// Empty string when (A, B) is a reducing pair of `work`.
inline std::string check_pair(const Digraph& work, const EdgeSet& a, const EdgeSet& b) {
  if (a.empty()) return "empty A";
  if (!subset_of(a, work.edges()) || !subset_of(b, work.edges())) return "pair uses a deleted arc";
  for (const Edge& e : a) {
    if (std::find(b.begin(), b.end(), e) != b.end()) return "A and B intersect";
  }
  if (!naive_cut_compatible(a)) return "A is not inside a cut";
  if (2 * b.size() > 3 * a.size()) return "|B| > 3/2 |A|";
  auto in = [](const EdgeSet& s, const Edge& e) { return std::find(s.begin(), s.end(), e) != s.end(); };
  for (const Edge& e1 : work.edges()) {
    for (const Edge& e2 : work.edges()) {
      if (e1.head != e2.tail || e1.tail == e2.head) continue;
      if (in(a, e1) && !in(a, e2) && !in(b, e2)) return "P3 leaves the pair";
      if (in(a, e2) && !in(a, e1) && !in(b, e1)) return "P3 leaves the pair";
    }
  }
  return {};
}

struct TraceTally {
  int steps = 0;
  int pairs = 0;
};

// Replays a D(1,1) trace from `d`. Empty string when every step is sound.
inline std::string check_d11_trace(const Digraph& d, const D11Trace& trace, TraceTally* tally = nullptr) {
  Digraph work = d;
  EdgeSet kept;
  for (const D11Step& s : trace.steps) {
    if (!subset_of(s.removed, work.edges())) return s.tag + ": removes an arc not in the working digraph";
    if (!subset_of(s.added, s.removed)) return s.tag + ": keeps an arc it does not remove";
    if (s.tag == "triangle" && (s.added.size() != 1 || s.removed.size() != 3)) return "triangle: wrong shape";
    if (s.tag != "oracle" && s.tag != "triangle" && s.tag != "leaf-tree") {
      const std::string err = check_pair(work, s.added, s.pair_b);
      if (!err.empty()) return s.tag + ": " + err;
      EdgeSet ab = s.added;
      ab.insert(ab.end(), s.pair_b.begin(), s.pair_b.end());
      std::sort(ab.begin(), ab.end());
      if (ab != s.removed) return s.tag + ": removed set differs from A u B";
      if (tally) ++tally->pairs;
    }
    kept.insert(kept.end(), s.added.begin(), s.added.end());
    if (!naive_cut_compatible(kept)) return s.tag + ": accumulated set left every cut of the original";
    work = work.without(s.removed);
    if (tally) ++tally->steps;
  }
  if (work.m() != 0) return "trace ends with arcs left";
  return {};
}

// Replays a D(2,2) cycle-peeling trace from `d`.
inline std::string check_d22_trace(const Digraph& d, const D22Trace& trace) {
  Digraph work = d;
  EdgeSet kept;
  for (const CyclePeelStep& s : trace.steps) {
    if (s.f_c.size() != s.cycle.size()) return "|F_C| differs from the cycle length";
    for (const Edge& e : s.e_c) {
      if (std::find(s.f_c.begin(), s.f_c.end(), e) != s.f_c.end()) return "E_C meets F_C";
    }
    if (s.e_c.size() > 2 * (s.x_c.size() + s.y_c.size())) return "|E_C| > 2|C|";
    if (!subset_of(s.f_c, work.edges()) || !subset_of(s.e_c, work.edges())) return "step uses a deleted arc";
    for (const Edge& e : work.edges()) {
      const bool into_x = std::find(s.x_c.begin(), s.x_c.end(), e.head) != s.x_c.end();
      const bool out_of_y = std::find(s.y_c.begin(), s.y_c.end(), e.tail) != s.y_c.end();
      const bool in_f = std::find(s.f_c.begin(), s.f_c.end(), e) != s.f_c.end();
      if ((into_x || out_of_y) && !in_f && std::find(s.e_c.begin(), s.e_c.end(), e) == s.e_c.end()) {
        return "E_C misses an arc at the cycle";
      }
    }
    kept.insert(kept.end(), s.f_c.begin(), s.f_c.end());
    if (!naive_cut_compatible(kept)) return "accumulated F_C sets left every cut";
    EdgeSet gone = s.e_c;
    gone.insert(gone.end(), s.f_c.begin(), s.f_c.end());
    work = work.without(make_edge_set(gone));
  }
  if (trace.base_degeneracy > 5) return "base case degeneracy above 5";
  return {};
}

struct Degrees {
  std::vector<int> in, out;
};

inline Degrees degrees_of(int n, const EdgeSet& edges) {
  Degrees d{std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
  for (const Edge& e : edges) {
    ++d.out[e.tail];
    ++d.in[e.head];
  }
  return d;
}

inline int naive_arrow_score(const Digraph& d, int k, const EdgeSet& r) {
  int s = 0;
  for (const Edge& e : r) s += d.out_degree(e.tail) <= k || d.in_degree(e.head) <= k ? 1 : 0;
  return s;
}

// Checks the fixpoint consequences of critical vertices on (d, R); returns
// an empty string on success.
inline std::string check_fixpoint(const Digraph& d, int k, const EdgeSet& r) {
  const EdgeSet kept = d.without(r).edges();
  const Degrees dk = degrees_of(d.n(), kept);
  const Degrees dr = degrees_of(d.n(), r);
  auto tail_crit = [&](Vertex x) { return dk.out[x] == k - 1 && dk.in[x] >= k; };
  auto head_crit = [&](Vertex y) { return dk.in[y] == k - 1 && dk.out[y] >= k; };
  std::vector<char> crit(static_cast<std::size_t>(d.n()), 0);
  for (const Edge& e : r) {
    if (!tail_crit(e.tail) && !head_crit(e.head)) return "arc with no critical end";
    if (tail_crit(e.tail)) crit[e.tail] = 1;
    if (head_crit(e.head)) crit[e.head] = 1;
  }
  if (std::count(crit.begin(), crit.end(), 1) < static_cast<long>(r.size())) return "|Crit(R)| < |R|";
  for (Vertex x = 0; x < d.n(); ++x) {
    const bool black = d.out_degree(x) <= k;
    const bool white = d.in_degree(x) <= k;
    if (black && dr.out[x] >= 2 && crit[x]) return "black vertex with two removed out-arcs is critical";
    if (white && dr.in[x] >= 2 && crit[x]) return "white vertex with two removed in-arcs is critical";
  }
  for (const Edge& e : r) {
    for (const Edge& f : r) {
      if (e.head == f.tail && e.tail != f.head && d.out_degree(e.head) <= k) {
        if (!tail_crit(e.tail) || head_crit(e.head)) return "Crit(xy) != {x} before a black y";
      }
      if (f.head == e.tail && f.tail != e.head && d.in_degree(e.tail) <= k) {
        if (tail_crit(e.tail) || !head_crit(e.head)) return "Crit(xy) != {y} after a white x";
      }
    }
  }
  return {};
}

// Replays the moves from `start`, re-checking feasibility and the potential.
inline std::string check_moves(const Digraph& d, int k, EdgeSet r, const std::vector<Rewrite>& moves) {
  for (const Rewrite& mv : moves) {
    for (const Edge& e : mv.remove) {
      if (!contains(r, e)) return "move removes an arc outside R";
    }
    for (const Edge& e : mv.add) {
      if (contains(r, e) || !d.has_edge(e)) return "move adds an invalid arc";
    }
    const EdgeSet next = set_union(set_difference(r, mv.remove), mv.add);
    const bool smaller = next.size() < r.size();
    const bool same_better = next.size() == r.size() && naive_arrow_score(d, k, next) > naive_arrow_score(d, k, r);
    if (!smaller && !same_better) return std::string("potential did not drop: ") + std::string(move_name(mv.kind));
    if (!naive_in_class(d.without(next), k - 1, k - 1)) return "move left the lower class";
    r = next;
  }
  return {};
}

inline std::string check_peel(const Digraph& d, int k, const RemovalState& start, const PeelResult& res) {
  if (!naive_in_class(res.kept, k - 1, k - 1)) return "kept digraph not in the lower class";
  if (set_union(res.kept.edges(), res.removed) != d.edges()) return "kept and removed do not partition E";
  if (!set_intersection(res.kept.edges(), res.removed).empty()) return "kept and removed overlap";
  if (static_cast<int>(res.removed.size()) * (2 * k + 1) > 2 * d.m()) return "|R| > 2m/(2k+1)";
  std::string err = check_moves(d, k, start.r, res.moves);
  if (!err.empty()) return err;
  return check_fixpoint(d, k, res.removed);
}

// Empty string when the split is an exact partition meeting the shared
// per-vertex bounds.
inline std::string check_split(const Digraph& d, const SplitResult& r, int p1, int p2) {
  if (!set_intersection(r.d1.edges(), r.d2.edges()).empty()) return "halves overlap";
  if (set_union(r.d1.edges(), r.d2.edges()) != d.edges()) return "halves do not cover E";
  if (r.part1.x != r.part2.x || r.part1.y != r.part2.y) return "halves use different (X, Y)";
  std::vector<char> in_x(static_cast<std::size_t>(d.n()), 0);
  for (Vertex v : r.part1.x) in_x[v] = 1;
  if (static_cast<int>(r.part1.x.size() + r.part1.y.size()) != d.n()) return "(X, Y) is not a partition";
  const std::pair<const Digraph*, int> halves[] = {{&r.d1, p1}, {&r.d2, p2}};
  for (const auto& [h, p] : halves) {
    if (!naive_in_class(*h, p, p)) return "half not in its class";
    for (Vertex v = 0; v < d.n(); ++v) {
      if (in_x[v] && h->in_degree(v) > p) return "x in X exceeds its indegree bound";
      if (!in_x[v] && h->out_degree(v) > p) return "y in Y exceeds its outdegree bound";
    }
  }
  return {};
}

}  // namespace dicut::testing
