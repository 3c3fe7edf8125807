#pragma once

// Naive reference computations used as independent oracles by the tests.
// Deliberately written without any library algorithm beyond Digraph itself.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/graph_core.hpp"

namespace dicut::testing {

inline int naive_cut_size(const Digraph& d, std::uint32_t x_mask) {
  int size = 0;
  for (const Edge& e : d.edges()) {
    if ((x_mask >> e.tail & 1U) && !(x_mask >> e.head & 1U)) ++size;
  }
  return size;
}

inline int naive_max_dicut(const Digraph& d) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1U << d.n()); ++mask) best = std::max(best, naive_cut_size(d, mask));
  return best;
}

inline bool naive_in_class(const Digraph& d, int k, int ell) {
  for (Vertex v = 0; v < d.n(); ++v) {
    int in = 0;
    int out = 0;
    for (const Edge& e : d.edges()) {
      in += e.head == v ? 1 : 0;
      out += e.tail == v ? 1 : 0;
    }
    if (in > k && out > ell) return false;
  }
  return true;
}

// Head of one arc equal to the tail of another, three distinct vertices.
inline bool naive_p3_free(const EdgeSet& s) {
  for (const Edge& a : s) {
    for (const Edge& b : s) {
      if (a.head == b.tail && a.tail != b.head) return false;
    }
  }
  return true;
}

inline bool naive_contained_in_cut(const Digraph& d, const EdgeSet& s) {
  for (std::uint32_t mask = 0; mask < (1U << d.n()); ++mask) {
    bool ok = true;
    for (const Edge& e : s) {
      if (!((mask >> e.tail & 1U) && !(mask >> e.head & 1U))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline std::vector<std::array<Vertex, 3>> naive_triangles(const Digraph& d) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < d.n(); ++a) {
    for (Vertex b = a + 1; b < d.n(); ++b) {
      for (Vertex c = a + 1; c < d.n(); ++c) {
        if (b != c && d.has_edge(a, b) && d.has_edge(b, c) && d.has_edge(c, a)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

inline int naive_packing_from(const std::vector<std::array<Vertex, 3>>& tri, std::size_t from,
                              std::vector<char>& used) {
  int best = 0;
  for (std::size_t i = from; i < tri.size(); ++i) {
    const auto& t = tri[i];
    if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
    for (Vertex v : t) used[v] = 1;
    best = std::max(best, 1 + naive_packing_from(tri, i + 1, used));
    for (Vertex v : t) used[v] = 0;
  }
  return best;
}

inline int naive_triangle_packing(const Digraph& d) {
  std::vector<char> used(static_cast<std::size_t>(d.n()), 0);
  return naive_packing_from(naive_triangles(d), 0, used);
}

// Recomputes the cut from X and compares with the certificate.
inline bool naive_certificate_ok(const Digraph& d, const CutCertificate& c) {
  std::vector<char> in_x(static_cast<std::size_t>(d.n()), 0);
  for (Vertex v : c.x) {
    if (v < 0 || v >= d.n()) return false;
    in_x[v] = 1;
  }
  VertexSet all(static_cast<std::size_t>(d.n()));
  std::iota(all.begin(), all.end(), 0);
  VertexSet xy = c.x;
  xy.insert(xy.end(), c.y.begin(), c.y.end());
  std::sort(xy.begin(), xy.end());
  if (xy != all) return false;
  EdgeSet cut;
  for (const Edge& e : d.edges()) {
    if (in_x[e.tail] && !in_x[e.head]) cut.push_back(e);
  }
  return cut == c.cut_edges && c.size == static_cast<int>(cut.size());
}

// Smallest integer >= num/den for non-negative values.
inline long ceil_div(long num, long den) { return (num + den - 1) / den; }

}  // namespace dicut::testing
