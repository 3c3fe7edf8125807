#include "dicut/color_cut.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "dicut/errors.hpp"

namespace dicut {

DegeneracyOrder degeneracy_order(const UndirectedGraph& g) {
  const int n = g.n();
  DegeneracyOrder result;
  std::vector<int> degree(n);
  std::set<std::pair<int, int>> queue;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    queue.insert({degree[v], v});
  }
  std::vector<char> removed(n, 0);
  while (!queue.empty()) {
    const auto [deg, v] = *queue.begin();
    queue.erase(queue.begin());
    removed[v] = 1;
    result.order.push_back(v);
    result.degeneracy = std::max(result.degeneracy, deg);
    for (const auto& inc : g.incident(v)) {
      const int u = inc.neighbor;
      if (removed[u]) continue;
      queue.erase({degree[u], u});
      queue.insert({--degree[u], u});
    }
  }
  return result;
}

std::vector<int> greedy_coloring(const UndirectedGraph& g, const DegeneracyOrder& order) {
  std::vector<int> colors(g.n(), -1);
  std::vector<char> used;
  for (auto it = order.order.rbegin(); it != order.order.rend(); ++it) {
    used.assign(g.degree(*it) + 1, 0);
    for (const auto& inc : g.incident(*it)) {
      const int c = colors[inc.neighbor];
      if (c >= 0 && c < static_cast<int>(used.size())) used[c] = 1;
    }
    colors[*it] = static_cast<int>(std::find(used.begin(), used.end(), 0) - used.begin());
  }
  return colors;
}

bool is_proper_coloring(const UndirectedGraph& g, const std::vector<int>& colors) {
  if (static_cast<int>(colors.size()) != g.n()) return false;
  if (std::any_of(colors.begin(), colors.end(), [](int c) { return c < 0; })) return false;
  for (int e = 0; e < g.m(); ++e) {
    if (colors[g.ends(e).first] == colors[g.ends(e).second]) return false;
  }
  return true;
}

Rational balanced_split_ratio(int gamma) {
  if (gamma <= 1) return Rational(1);
  return Rational(static_cast<std::int64_t>(gamma) * gamma / 4,
                  static_cast<std::int64_t>(gamma) * (gamma - 1) / 2);
}

ClassBipartition best_balanced_class_bipartition(const UndirectedGraph& g,
                                                 const std::vector<int>& colors, int gamma) {
  if (!is_proper_coloring(g, colors)) throw InputError("colouring is not proper");
  const int used = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  if (gamma < 0) gamma = used;
  if (gamma < used) throw InputError("colouring uses more than gamma colours");
  std::vector<std::vector<int>> between(gamma, std::vector<int>(gamma, 0));
  for (int e = 0; e < g.m(); ++e) {
    const int a = colors[g.ends(e).first];
    const int b = colors[g.ends(e).second];
    ++between[a][b];
    ++between[b][a];
  }
  const int half = gamma / 2;
  std::vector<char> pick(gamma, 0);
  std::fill(pick.begin(), pick.begin() + half, 1);
  ClassBipartition best;
  best.crossing = -1;
  // prev_permutation over a descending mask walks the groups in lex order.
  do {
    int crossing = 0;
    for (int a = 0; a < gamma; ++a) {
      if (!pick[a]) continue;
      for (int b = 0; b < gamma; ++b) {
        if (!pick[b]) crossing += between[a][b];
      }
    }
    if (crossing > best.crossing) {
      best.crossing = crossing;
      best.group.clear();
      for (int a = 0; a < gamma; ++a) {
        if (pick[a]) best.group.push_back(a);
      }
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  if (best.crossing < 0) best.crossing = 0;
  std::vector<char> on_s(std::max(gamma, 1), 0);
  for (int a : best.group) on_s[a] = 1;
  for (int v = 0; v < g.n(); ++v) (on_s[colors[v]] ? best.s : best.t).push_back(v);
  return best;
}

CutCertificate better_oriented_cut(const Digraph& d, const VertexSet& s) {
  const CutCertificate forward = cut_from_partition(d, s);
  std::vector<char> in_s(d.n(), 0);
  for (Vertex v : s) in_s[v] = 1;
  VertexSet t;
  for (Vertex v = 0; v < d.n(); ++v) {
    if (!in_s[v]) t.push_back(v);
  }
  const CutCertificate backward = cut_from_partition(d, t);
  return backward.size > forward.size ? backward : forward;
}

namespace {

// Colours the subgraph induced by `part`, returning colours by global vertex.
int color_part(const Digraph& d, const VertexSet& part, int offset, std::vector<int>& colors) {
  const LocalGraph local = induced_subgraph(d, part);
  const UndirectedGraph g = underlying_graph(local.graph);
  const DegeneracyOrder order = degeneracy_order(g);
  const auto local_colors = greedy_coloring(g, order);
  for (std::size_t i = 0; i < local_colors.size(); ++i) {
    colors[local.to_global[i]] = offset + local_colors[i];
  }
  return order.degeneracy;
}

}  // namespace

CutCertificate dicut_acyclic(const Digraph& d, int k) {
  if (k < 0) throw PreconditionError("dicut_acyclic: k must be non-negative");
  if (!is_acyclic(d)) throw PreconditionError("dicut_acyclic: digraph has a directed cycle");
  if (!in_class(d, k, k)) throw PreconditionError("dicut_acyclic: digraph is not in D(k,k)");
  VertexSet low_out;
  VertexSet rest;
  for (Vertex v = 0; v < d.n(); ++v) (d.out_degree(v) <= k ? low_out : rest).push_back(v);
  std::vector<int> colors(d.n(), 0);
  const int deg_plus = color_part(d, low_out, 0, colors);
  const int deg_minus = color_part(d, rest, k + 1, colors);
  if (deg_plus > k || deg_minus > k) {
    throw AlgorithmError("dicut_acyclic: side is not k-degenerate");
  }
  const UndirectedGraph g = underlying_graph(d);
  if (!is_proper_coloring(g, colors)) throw AlgorithmError("dicut_acyclic: combined colouring is improper");
  const ClassBipartition split = best_balanced_class_bipartition(g, colors, 2 * k + 2);
  return better_oriented_cut(d, split.s);
}

CutCertificate dicut_d22(const Digraph& d, D22Trace* trace) {
  if (!in_class(d, 2, 2)) throw PreconditionError("dicut_d22: digraph is not in D(2,2)");
  Digraph work = d;
  EdgeSet kept;
  for (;;) {
    const ClassPartition p = *class_partition(work, 2, 2);
    std::vector<char> in_x(work.n(), 0);
    for (Vertex v : p.x) in_x[v] = 1;
    UndirectedGraph bipartite(work.n());
    std::vector<Edge> arc_of;
    for (const Edge& e : work.edges()) {
      if (in_x[e.tail] && !in_x[e.head]) {
        bipartite.add_edge(e.tail, e.head);
        arc_of.push_back(e);
      }
    }
    const auto cycle = shortest_cycle(bipartite);
    if (!cycle) break;
    CyclePeelStep step;
    step.cycle = cycle->vertices;
    for (Vertex v : cycle->vertices) (in_x[v] ? step.x_c : step.y_c).push_back(v);
    step.x_c = make_vertex_set(std::move(step.x_c));
    step.y_c = make_vertex_set(std::move(step.y_c));
    for (int e : cycle->edges) step.f_c.push_back(arc_of[e]);
    step.f_c = make_edge_set(std::move(step.f_c));
    for (const Edge& e : work.edges()) {
      if (contains(step.x_c, e.head) || contains(step.y_c, e.tail)) step.e_c.push_back(e);
    }
    if (step.e_c.size() > 2 * (step.x_c.size() + step.y_c.size())) {
      throw AlgorithmError("dicut_d22: cycle neighbourhood larger than 2|C|");
    }
    kept = set_union(kept, step.f_c);
    if (!is_cut_compatible(d, kept)) throw AlgorithmError("dicut_d22: peeled arcs leave the cut");
    work = work.without(set_union(step.e_c, step.f_c));
    if (trace) trace->steps.push_back(std::move(step));
  }
  const UndirectedGraph g = underlying_graph(work);
  const DegeneracyOrder order = degeneracy_order(g);
  if (order.degeneracy > 5) throw AlgorithmError("dicut_d22: base case is not 5-degenerate");
  const auto colors = greedy_coloring(g, order);
  const ClassBipartition split = best_balanced_class_bipartition(g, colors);
  const CutCertificate base = better_oriented_cut(work, split.s);
  kept = set_union(kept, base.cut_edges);
  if (!is_cut_compatible(d, kept)) throw AlgorithmError("dicut_d22: combined arcs leave the cut");
  if (trace) {
    trace->base_degeneracy = order.degeneracy;
    trace->base_colors = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  }
  return extend_p3free_to_cut(d, kept);
}

}  // namespace dicut
