#include "dicut/decompose.hpp"

#include <string>

#include "dicut/errors.hpp"

namespace dicut {

EdgeColoring bipartite_edge_coloring(const UndirectedGraph& g, int delta) {
  if (!two_coloring(g)) throw InputError("edge colouring: graph is not bipartite");
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > delta) throw InputError("edge colouring: degree exceeds delta");
  }
  EdgeColoring color(g.m(), -1);
  // at[v][c]: edge of colour c at v, or -1.
  std::vector<std::vector<int>> at(g.n(), std::vector<int>(std::max(delta, 0), -1));
  auto free_color = [&](int v) {
    for (int c = 0; c < delta; ++c) {
      if (at[v][c] < 0) return c;
    }
    throw AlgorithmError("edge colouring: no free colour");
  };
  for (int e = 0; e < g.m(); ++e) {
    const auto [u, v] = g.ends(e);
    const int a = free_color(u);
    if (at[v][a] >= 0) {
      const int b = free_color(v);
      // Swap a and b along the a/b path from v; bipartiteness keeps u off it.
      std::vector<int> path;
      int w = v;
      int c = a;
      while (at[w][c] >= 0) {
        const int edge = at[w][c];
        path.push_back(edge);
        const auto [p, q] = g.ends(edge);
        w = p == w ? q : p;
        c = c == a ? b : a;
      }
      for (int edge : path) {
        const auto [p, q] = g.ends(edge);
        at[p][color[edge]] = -1;
        at[q][color[edge]] = -1;
      }
      for (int edge : path) {
        const auto [p, q] = g.ends(edge);
        color[edge] = color[edge] == a ? b : a;
        at[p][color[edge]] = edge;
        at[q][color[edge]] = edge;
      }
      if (at[u][a] >= 0 || at[v][a] >= 0) throw AlgorithmError("edge colouring: swap failed");
    }
    color[e] = a;
    at[u][a] = e;
    at[v][a] = e;
  }
  return color;
}

bool is_proper_edge_coloring(const UndirectedGraph& g, const EdgeColoring& colors, int delta) {
  if (static_cast<int>(colors.size()) != g.m()) return false;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<char> seen(std::max(delta, 0), 0);
    for (const auto& inc : g.incident(v)) {
      const int c = colors[inc.edge];
      if (c < 0 || c >= delta || seen[c]) return false;
      seen[c] = 1;
    }
  }
  return true;
}

SplitResult split_dkk(const Digraph& d, int p1, int p2, ForwardArcs forward) {
  if (p1 < 0 || p2 < 0) throw PreconditionError("split_dkk: split sizes must be non-negative");
  const int p = p1 + p2;
  const auto part = class_partition(d, p, p);
  if (!part) {
    throw PreconditionError("split_dkk: digraph is not in D(" + std::to_string(p) + "," +
                            std::to_string(p) + ")");
  }
  std::vector<char> in_x(d.n(), 0);
  for (Vertex v : part->x) in_x[v] = 1;

  // Y -> X arcs, coloured with p colours; colours below p1 go to D1.
  UndirectedGraph backward(d.n());
  std::vector<int> backward_arc;
  for (int id = 0; id < d.m(); ++id) {
    const Edge& e = d.edge(id);
    if (!in_x[e.tail] && in_x[e.head]) {
      backward.add_edge(e.tail, e.head);
      backward_arc.push_back(id);
    }
  }
  const EdgeColoring colors = bipartite_edge_coloring(backward, p);
  std::vector<int> side(d.m(), -1);  // 0 for D1, 1 for D2
  for (std::size_t i = 0; i < backward_arc.size(); ++i) side[backward_arc[i]] = colors[i] < p1 ? 0 : 1;

  // Remaining constrained arcs fill D1 up to p1 at their constrained end.
  auto fill = [&](std::span<const int> arcs) {
    int first = 0;
    for (int id : arcs) first += side[id] == 0 ? 1 : 0;
    for (int id : arcs) {
      if (side[id] >= 0) continue;
      side[id] = first < p1 ? 0 : 1;
      first += side[id] == 0 ? 1 : 0;
    }
  };
  for (Vertex v = 0; v < d.n(); ++v) fill(in_x[v] ? d.in_edges(v) : d.out_edges(v));

  int toggle = 0;
  for (int id = 0; id < d.m(); ++id) {
    if (side[id] >= 0) continue;
    if (forward == ForwardArcs::Alternate && p1 > 0 && p2 > 0) {
      side[id] = toggle;
      toggle ^= 1;
    } else {
      side[id] = p1 > 0 ? 0 : 1;
    }
  }

  std::vector<Edge> first;
  std::vector<Edge> second;
  for (int id = 0; id < d.m(); ++id) (side[id] == 0 ? first : second).push_back(d.edge(id));
  SplitResult result{Digraph(d.n(), std::move(first)), Digraph(d.n(), std::move(second)),
                     {p1, p1, part->x, part->y}, {p2, p2, part->x, part->y}};
  if (!is_valid_class_partition(result.d1, result.part1) ||
      !is_valid_class_partition(result.d2, result.part2)) {
    throw AlgorithmError("split_dkk: a half violates its degree bounds");
  }
  return result;
}

int cut_cover_hint(const Digraph& d) {
  if (!in_class(d, 2, 2)) throw PreconditionError("cut_cover_hint: digraph is not in D(2,2)");
  if (d.m() == 0) return 0;
  return in_class(d, 1, 1) ? 3 : 6;
}

}  // namespace dicut
