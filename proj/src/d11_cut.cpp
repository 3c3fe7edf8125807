#include "dicut/d11_cut.hpp"

#include <algorithm>
#include <functional>

#include "dicut/errors.hpp"
#include "dicut/oracle.hpp"
#include "dicut/undirected.hpp"

namespace dicut {

namespace {

void require_d11(const Digraph& d, const char* what) {
  if (!in_class(d, 1, 1)) throw PreconditionError(std::string(what) + ": digraph is not in D(1,1)");
  if (has_digon(d)) throw PreconditionError(std::string(what) + ": digraph has a digon");
}

EdgeSet out_arcs(const Digraph& g, Vertex v) {
  EdgeSet s;
  for (int id : g.out_edges(v)) s.push_back(g.edge(id));
  return s;
}

// Directed cycles covering the vertices of `mask`, if the induced subgraph is
// exactly a disjoint union of directed cycles. Each cycle starts at its
// smallest vertex.
std::optional<std::vector<std::vector<Vertex>>> side_cycles(const Digraph& g,
                                                            const std::vector<char>& mask) {
  std::vector<Vertex> next(g.n(), -1);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!mask[v]) continue;
    int outs = 0;
    int ins = 0;
    for (int id : g.out_edges(v)) {
      if (mask[g.edge(id).head]) {
        ++outs;
        next[v] = g.edge(id).head;
      }
    }
    for (int id : g.in_edges(v)) ins += mask[g.edge(id).tail] ? 1 : 0;
    if (outs != 1 || ins != 1) return std::nullopt;
  }
  std::vector<std::vector<Vertex>> cycles;
  std::vector<char> seen(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (!mask[v] || seen[v]) continue;
    std::vector<Vertex> cycle;
    for (Vertex w = v; !seen[w]; w = next[w]) {
      seen[w] = 1;
      cycle.push_back(w);
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

std::vector<char> mask_of(int n, const VertexSet& vs) {
  std::vector<char> mask(n, 0);
  for (Vertex v : vs) mask[v] = 1;
  return mask;
}

// (l+1)-set number j of an odd cycle of length 2l+1, as a position mask.
std::vector<char> l_set_mask(int len, int j) {
  std::vector<char> in_l(len, 0);
  for (int i = 0; i < len; i += 2) in_l[(j + i) % len] = 1;
  return in_l;
}

// Cycle arcs leaving the complement of L, plus every non-cycle arc into L.
EdgeSet l_set_arcs(const Digraph& g, const std::vector<Vertex>& cycle, const std::vector<char>& in_l) {
  const int len = static_cast<int>(cycle.size());
  EdgeSet a;
  for (int i = 0; i < len; ++i) {
    const Vertex c = cycle[i];
    if (!in_l[i]) {
      a.push_back({c, cycle[(i + 1) % len]});
      continue;
    }
    const Vertex prev = cycle[(i + len - 1) % len];
    for (int id : g.in_edges(c)) {
      if (g.edge(id).tail != prev) a.push_back(g.edge(id));
    }
  }
  return a;
}

VertexSet l_vertices(const std::vector<Vertex>& cycle, const std::vector<char>& in_l) {
  VertexSet l;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (in_l[i]) l.push_back(cycle[i]);
  }
  return make_vertex_set(std::move(l));
}

// Candidate pairs are offered with A in the orientation of the graph the
// pattern inspected; returning true stops the search.
using Offer = std::function<bool(ReducingPair&&)>;

void leaf_pattern(const Digraph& g, const Offer& offer) {
  const PlusMinus pm = plus_minus(g);
  const auto minus = mask_of(g.n(), pm.minus);
  for (Vertex v0 : pm.minus) {
    EdgeSet outside;
    for (int id : g.in_edges(v0)) {
      if (!minus[g.edge(id).tail]) outside.push_back(g.edge(id));
    }
    if (outside.size() < 2) continue;
    ReducingPair p;
    p.pattern = PairPattern::LeafInMinus;
    p.a = {outside[0], outside[1]};
    if (offer(std::move(p))) return;
  }
}

void even_cycle_pattern(const Digraph& g, const Offer& offer) {
  const PlusMinus pm = plus_minus(g);
  const auto cycles = side_cycles(g, mask_of(g.n(), pm.plus));
  if (!cycles) return;
  for (const auto& cycle : *cycles) {
    if (cycle.size() % 2 != 0) continue;
    ReducingPair p;
    p.pattern = PairPattern::EvenCycle;
    p.cycle = cycle;
    for (std::size_t i = 1; i < cycle.size(); i += 2) {
      const EdgeSet outs = out_arcs(g, cycle[i]);
      p.a.insert(p.a.end(), outs.begin(), outs.end());
    }
    if (offer(std::move(p))) return;
  }
}

struct CycleIndex {
  std::vector<std::vector<Vertex>> cycles;
  std::vector<int> cycle_of;  // -1 when not on a cycle
  std::vector<int> position;
};

CycleIndex index_cycles(int n, std::vector<std::vector<Vertex>> cycles, int id_offset = 0) {
  CycleIndex idx{std::move(cycles), std::vector<int>(n, -1), std::vector<int>(n, -1)};
  for (std::size_t c = 0; c < idx.cycles.size(); ++c) {
    for (std::size_t i = 0; i < idx.cycles[c].size(); ++i) {
      idx.cycle_of[idx.cycles[c][i]] = static_cast<int>(c) + id_offset;
      idx.position[idx.cycles[c][i]] = static_cast<int>(i);
    }
  }
  return idx;
}

void v0_attach_pattern(const Digraph& g, const Offer& offer) {
  const PlusMinus pm = plus_minus(g);
  const auto minus_cycles = side_cycles(g, mask_of(g.n(), pm.minus));
  if (!minus_cycles) return;
  const CycleIndex idx = index_cycles(g.n(), *minus_cycles);
  for (Vertex y : pm.zero) {
    for (int id : g.out_edges(y)) {
      const Vertex z = g.edge(id).head;
      if (idx.cycle_of[z] < 0) continue;
      const auto& cycle = idx.cycles[idx.cycle_of[z]];
      const int len = static_cast<int>(cycle.size());
      if (len % 2 == 0) continue;
      const bool has_in = g.in_degree(y) > 0;
      for (int j = 0; j < len; ++j) {
        const auto in_l = l_set_mask(len, j);
        if (static_cast<bool>(in_l[idx.position[z]]) == has_in) continue;
        ReducingPair p;
        p.pattern = has_in ? PairPattern::V0AttachInEdge : PairPattern::V0AttachSource;
        p.cycle = cycle;
        p.l_set = l_vertices(cycle, in_l);
        p.a = l_set_arcs(g, cycle, in_l);
        if (has_in) p.a.push_back(g.edge(g.in_edges(y)[0]));
        if (offer(std::move(p))) return;
      }
    }
  }
}

// Plus and minus cycles together with the unique external arc at each of
// their vertices, when the component has that shape.
struct LinkStructure {
  CycleIndex plus;
  CycleIndex minus;
  std::vector<Vertex> link_head;  // for plus-cycle vertices
};

std::optional<LinkStructure> link_structure(const Digraph& g) {
  const PlusMinus pm = plus_minus(g);
  if (!pm.zero.empty()) {
    for (Vertex v : pm.zero) {
      if (g.degree(v) > 0) return std::nullopt;
    }
  }
  auto plus_cycles = side_cycles(g, mask_of(g.n(), pm.plus));
  auto minus_cycles = side_cycles(g, mask_of(g.n(), pm.minus));
  if (!plus_cycles || !minus_cycles || plus_cycles->empty()) return std::nullopt;
  LinkStructure s{index_cycles(g.n(), std::move(*plus_cycles)),
                  index_cycles(g.n(), std::move(*minus_cycles)),
                  std::vector<Vertex>(g.n(), -1)};
  for (const auto& cycle : s.plus.cycles) {
    const int len = static_cast<int>(cycle.size());
    for (int i = 0; i < len; ++i) {
      const Vertex v = cycle[i];
      if (g.out_degree(v) != 2 || g.in_degree(v) != 1) return std::nullopt;
      for (int id : g.out_edges(v)) {
        const Vertex h = g.edge(id).head;
        if (h != cycle[(i + 1) % len]) s.link_head[v] = h;
      }
      if (s.minus.cycle_of[s.link_head[v]] < 0) return std::nullopt;
    }
  }
  return s;
}

// Arcs u -> b1 (or u -> v when there are no interior vertices) and all
// out-arcs of b2, b4, ..., b(2 * evens).
EdgeSet plus_path_arcs(const Digraph& g, const std::vector<Vertex>& path, int evens) {
  EdgeSet a{{path[0], path[1]}};
  for (int j = 1; j <= evens; ++j) {
    const EdgeSet outs = out_arcs(g, path[2 * j]);
    a.insert(a.end(), outs.begin(), outs.end());
  }
  return a;
}

// Vertices from cycle[from] to cycle[to] following the arcs, inclusive.
std::vector<Vertex> cycle_walk(const std::vector<Vertex>& cycle, int from, int to) {
  const int len = static_cast<int>(cycle.size());
  std::vector<Vertex> walk{cycle[from]};
  for (int i = from; i != to;) {
    i = (i + 1) % len;
    walk.push_back(cycle[i]);
  }
  return walk;
}

void multiedge_pattern(const Digraph& g, const Offer& offer) {
  const auto s = link_structure(g);
  if (!s) return;
  for (const auto& plus_cycle : s->plus.cycles) {
    const int len = static_cast<int>(plus_cycle.size());
    std::vector<std::vector<int>> linked_positions(s->minus.cycles.size());
    for (int i = 0; i < len; ++i) {
      linked_positions[s->minus.cycle_of[s->link_head[plus_cycle[i]]]].push_back(i);
    }
    for (std::size_t c = 0; c < linked_positions.size(); ++c) {
      const auto& pos = linked_positions[c];
      if (pos.size() < 2) continue;
      const auto& minus_cycle = s->minus.cycles[c];
      const int minus_len = static_cast<int>(minus_cycle.size());
      for (std::size_t i = 0; i < pos.size(); ++i) {
        const int from = pos[i];
        const int to = pos[(i + 1) % pos.size()];
        const int interior = (to - from - 1 + len) % len;
        if (interior % 2 != 0) continue;
        const auto path = cycle_walk(plus_cycle, from, to);
        const Vertex x = s->link_head[path.front()];
        const Vertex y = s->link_head[path.back()];
        for (int j = 0; j < minus_len; ++j) {
          const auto in_l = l_set_mask(minus_len, j);
          if (!in_l[s->minus.position[x]] || in_l[s->minus.position[y]]) continue;
          ReducingPair p;
          p.pattern = PairPattern::MultiedgeInM;
          p.cycle = minus_cycle;
          p.l_set = l_vertices(minus_cycle, in_l);
          p.path = path;
          p.a = l_set_arcs(g, minus_cycle, in_l);
          const EdgeSet extra = plus_path_arcs(g, path, interior / 2);
          p.a.insert(p.a.end(), extra.begin(), extra.end());
          if (offer(std::move(p))) return;
        }
      }
    }
  }
}

void gamma_cycle_pattern(const Digraph& g, const Offer& offer) {
  const auto s = link_structure(g);
  if (!s) return;
  const int plus_count = static_cast<int>(s->plus.cycles.size());
  UndirectedGraph contraction(plus_count + static_cast<int>(s->minus.cycles.size()));
  std::vector<Edge> link_of_edge;
  for (const auto& cycle : s->plus.cycles) {
    for (Vertex v : cycle) {
      const Vertex h = s->link_head[v];
      contraction.add_edge(s->plus.cycle_of[v], plus_count + s->minus.cycle_of[h]);
      link_of_edge.push_back({v, h});
    }
  }
  const auto gamma = shortest_cycle(contraction);
  if (!gamma) return;
  const int size = static_cast<int>(gamma->vertices.size());
  ReducingPair p;
  p.pattern = PairPattern::GammaCycle;
  for (int i = 0; i < size; ++i) {
    const int node = gamma->vertices[i];
    const Edge e1 = link_of_edge[gamma->edges[(i + size - 1) % size]];
    const Edge e2 = link_of_edge[gamma->edges[i]];
    if (node < plus_count) {
      const auto& cycle = s->plus.cycles[node];
      const int len = static_cast<int>(cycle.size());
      int from = s->plus.position[e1.tail];
      int to = s->plus.position[e2.tail];
      if (((to - from - 1 + len) % len) % 2 == 0) std::swap(from, to);
      const auto path = cycle_walk(cycle, from, to);
      const int interior = static_cast<int>(path.size()) - 2;
      if (interior % 2 == 0) return;
      const EdgeSet arcs = plus_path_arcs(g, path, (interior - 1) / 2);
      p.a.insert(p.a.end(), arcs.begin(), arcs.end());
      p.path.insert(p.path.end(), path.begin(), path.end());
    } else {
      const auto& cycle = s->minus.cycles[node - plus_count];
      const int len = static_cast<int>(cycle.size());
      int chosen = -1;
      for (int j = 0; j < len && chosen < 0; ++j) {
        const auto in_l = l_set_mask(len, j);
        if (in_l[s->minus.position[e1.head]] && in_l[s->minus.position[e2.head]]) chosen = j;
      }
      if (chosen < 0) return;
      const auto in_l = l_set_mask(len, chosen);
      const EdgeSet arcs = l_set_arcs(g, cycle, in_l);
      p.a.insert(p.a.end(), arcs.begin(), arcs.end());
      const VertexSet l = l_vertices(cycle, in_l);
      p.l_set.insert(p.l_set.end(), l.begin(), l.end());
      p.cycle.insert(p.cycle.end(), cycle.begin(), cycle.end());
    }
  }
  p.l_set = make_vertex_set(std::move(p.l_set));
  offer(std::move(p));
}

// Components without V+ and V- vertices are directed paths or cycles.
void path_or_cycle_pattern(const Digraph& g, const Offer& offer) {
  const PlusMinus pm = plus_minus(g);
  if (!pm.plus.empty() || !pm.minus.empty()) return;
  Vertex start = -1;
  for (Vertex v = 0; v < g.n() && start < 0; ++v) {
    if (g.out_degree(v) == 1 && g.in_degree(v) == 0) start = v;
  }
  const bool is_cycle = start < 0;
  if (is_cycle) {
    for (Vertex v = 0; v < g.n() && start < 0; ++v) {
      if (g.out_degree(v) > 0) start = v;
    }
  }
  std::vector<Edge> walk;
  for (Vertex v = start; g.out_degree(v) == 1;) {
    const Edge e = g.edge(g.out_edges(v)[0]);
    walk.push_back(e);
    v = e.head;
    if (v == start) break;
  }
  ReducingPair p;
  p.pattern = PairPattern::PathOrCycle;
  const std::size_t usable = is_cycle ? walk.size() - walk.size() % 2 : walk.size();
  for (std::size_t i = 0; i < usable; i += 2) p.a.push_back(walk[i]);
  for (const Edge& e : walk) p.path.push_back(e.tail);
  offer(std::move(p));
}

}  // namespace

PlusMinus plus_minus(const Digraph& d) {
  require_d11(d, "plus_minus");
  PlusMinus pm;
  for (Vertex v = 0; v < d.n(); ++v) {
    if (d.out_degree(v) >= 2) {
      pm.plus.push_back(v);
    } else if (d.in_degree(v) >= 2) {
      pm.minus.push_back(v);
    } else {
      pm.zero.push_back(v);
    }
  }
  return pm;
}

std::optional<TriangleReduction> find_triangle_reduction(const Digraph& d) {
  require_d11(d, "find_triangle_reduction");
  for (const Triangle& t : directed_triangles(d)) {
    for (int i = 0; i < 3; ++i) {
      const Vertex x = t[i];
      const Vertex y = t[(i + 1) % 3];
      if (d.in_degree(x) == 1 && d.out_degree(y) == 1) return TriangleReduction{{x, y}, t};
    }
  }
  return std::nullopt;
}

std::string_view pattern_name(PairPattern p) {
  switch (p) {
    case PairPattern::LeafInMinus: return "leaf-in-minus";
    case PairPattern::LeafInPlus: return "leaf-in-plus";
    case PairPattern::EvenCycle: return "even-cycle";
    case PairPattern::V0AttachInEdge: return "v0-attach-with-inedge";
    case PairPattern::V0AttachSource: return "v0-attach-source";
    case PairPattern::MultiedgeInM: return "multiedge-in-M";
    case PairPattern::GammaCycle: return "gamma-cycle";
    case PairPattern::PathOrCycle: return "path-or-cycle";
  }
  return "unknown";
}

EdgeSet closure_of(const Digraph& d, const EdgeSet& a) {
  EdgeSet b;
  for (const Edge& e : a) {
    for (int id : d.in_edges(e.tail)) {
      if (d.edge(id).tail != e.head) b.push_back(d.edge(id));
    }
    for (int id : d.out_edges(e.head)) {
      if (d.edge(id).head != e.tail) b.push_back(d.edge(id));
    }
  }
  return set_difference(make_edge_set(std::move(b)), a);
}

bool is_valid_reducing_pair(const Digraph& d, const EdgeSet& a, const EdgeSet& b) {
  if (a.empty()) return false;
  for (const Edge& e : a) {
    if (!d.has_edge(e)) return false;
  }
  for (const Edge& e : b) {
    if (!d.has_edge(e)) return false;
  }
  if (!set_intersection(a, b).empty()) return false;
  if (!is_cut_compatible(d, a)) return false;
  const EdgeSet needed = closure_of(d, a);
  if (!std::includes(b.begin(), b.end(), needed.begin(), needed.end())) return false;
  return 2 * b.size() <= 3 * a.size();
}

ReducingPair find_reducing_pair(const Digraph& d) {
  require_d11(d, "find_reducing_pair");
  if (!is_connected(d)) throw PreconditionError("find_reducing_pair: digraph is not connected");
  if (d.m() < 6) throw PreconditionError("find_reducing_pair: needs at least 6 arcs");
  if (find_triangle_reduction(d)) {
    throw PreconditionError("find_reducing_pair: a triangle reduction applies");
  }
  const Digraph rev = d.reversed();
  std::optional<ReducingPair> found;
  auto run = [&](void (*pattern)(const Digraph&, const Offer&)) {
    for (bool mirrored : {false, true}) {
      pattern(mirrored ? rev : d, [&](ReducingPair&& p) {
        p.mirrored = mirrored;
        if (mirrored) {
          p.a = reversed(p.a);
          if (p.pattern == PairPattern::LeafInMinus) p.pattern = PairPattern::LeafInPlus;
        }
        p.a = make_edge_set(std::move(p.a));
        if (!is_cut_compatible(d, p.a)) return false;
        p.b = closure_of(d, p.a);
        if (!is_valid_reducing_pair(d, p.a, p.b)) return false;
        found = std::move(p);
        return true;
      });
      if (found) return true;
    }
    return false;
  };
  if (run(leaf_pattern) || run(even_cycle_pattern) || run(v0_attach_pattern) ||
      run(multiedge_pattern) || run(gamma_cycle_pattern) || run(path_or_cycle_pattern)) {
    return *found;
  }
  throw AlgorithmError("find_reducing_pair: no pattern produced a valid reducing pair");
}

namespace {

EdgeSet to_global(const LocalGraph& local, const EdgeSet& edges) {
  EdgeSet out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back({local.to_global[e.tail], local.to_global[e.head]});
  return make_edge_set(std::move(out));
}

void apply_step(const Digraph& original, Digraph& work, EdgeSet& kept, D11Step step,
                D11Trace* trace) {
  kept = set_union(kept, step.added);
  if (!is_cut_compatible(original, kept)) {
    throw AlgorithmError("accumulated arc set is no longer contained in a cut (" + step.tag + ")");
  }
  work = work.without(step.removed);
  if (trace) trace->steps.push_back(std::move(step));
}

D11Step oracle_step(const Digraph& g, const LocalGraph* local) {
  const CutCertificate cut = max_dicut_exact(g);
  D11Step step{"oracle", cut.cut_edges, g.edges(), {}};
  if (local) {
    step.added = to_global(*local, step.added);
    step.removed = to_global(*local, step.removed);
  }
  return step;
}

}  // namespace

CutCertificate dicut_d11(const Digraph& d, D11Trace* trace) {
  require_d11(d, "dicut_d11");
  Digraph work = d;
  EdgeSet kept;
  while (work.m() > 0) {
    const LocalGraph local = induced_subgraph(work, edge_components(work).front());
    const Digraph& g = local.graph;
    if (g.m() <= 5) {
      apply_step(d, work, kept, oracle_step(g, &local), trace);
      continue;
    }
    if (const auto tr = find_triangle_reduction(g)) {
      const Triangle& t = tr->triangle;
      D11Step step{"triangle", {tr->edge}, {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}}, {}};
      step.added = to_global(local, step.added);
      step.removed = to_global(local, make_edge_set(step.removed));
      apply_step(d, work, kept, std::move(step), trace);
      continue;
    }
    const ReducingPair pair = find_reducing_pair(g);
    D11Step step{std::string(pattern_name(pair.pattern)), to_global(local, pair.a),
                 to_global(local, set_union(pair.a, pair.b)), to_global(local, pair.b)};
    apply_step(d, work, kept, std::move(step), trace);
  }
  return extend_p3free_to_cut(d, kept);
}

std::optional<TriangleForestShape> is_triangle_forest(const Digraph& d) {
  require_d11(d, "is_triangle_forest");
  if (!is_connected(d)) throw PreconditionError("is_triangle_forest: digraph is not connected");
  int active = 0;
  for (Vertex v = 0; v < d.n(); ++v) active += d.degree(v) > 0 ? 1 : 0;
  if (active == 0 || active % 3 != 0) return std::nullopt;
  const int t = active / 3;
  if (d.m() != 4 * t - 1) return std::nullopt;
  auto packing = max_triangle_packing_witness(d);
  if (static_cast<int>(packing.size()) != t) return std::nullopt;
  std::sort(packing.begin(), packing.end());
  EdgeSet triangle_arcs;
  for (const Triangle& tr : packing) {
    triangle_arcs.insert(triangle_arcs.end(), {{tr[0], tr[1]}, {tr[1], tr[2]}, {tr[2], tr[0]}});
  }
  return TriangleForestShape{packing, set_difference(d.edges(), make_edge_set(triangle_arcs))};
}

CutCertificate dicut_d11_connected(const Digraph& d, D11Trace* trace) {
  require_d11(d, "dicut_d11_connected");
  if (!is_connected(d)) throw PreconditionError("dicut_d11_connected: digraph is not connected");
  if (d.m() == 3 && directed_triangles(d).size() == 1) {
    throw PreconditionError("dicut_d11_connected: digraph is a directed triangle");
  }
  Digraph work = d;
  EdgeSet kept;
  while (work.m() > 0) {
    if (work.m() <= 6) {
      apply_step(d, work, kept, oracle_step(work, nullptr), trace);
      break;
    }
    const auto shape = is_triangle_forest(work);
    if (!shape) {
      const CutCertificate rest = dicut_d11(work, trace);
      kept = set_union(kept, rest.cut_edges);
      if (!is_cut_compatible(d, kept)) {
        throw AlgorithmError("dicut_d11_connected: combined arc set is not contained in a cut");
      }
      break;
    }
    std::vector<int> owner(work.n(), -1);
    for (std::size_t i = 0; i < shape->triangles.size(); ++i) {
      for (Vertex v : shape->triangles[i]) owner[v] = static_cast<int>(i);
    }
    std::vector<int> bridge_count(shape->triangles.size(), 0);
    for (const Edge& b : shape->bridges) {
      ++bridge_count[owner[b.tail]];
      ++bridge_count[owner[b.head]];
    }
    const int leaf = static_cast<int>(std::find(bridge_count.begin(), bridge_count.end(), 1) -
                                      bridge_count.begin());
    if (leaf == static_cast<int>(bridge_count.size())) {
      throw AlgorithmError("dicut_d11_connected: triangle tree has no leaf");
    }
    const Triangle& t = shape->triangles[leaf];
    const Edge bridge = *std::find_if(shape->bridges.begin(), shape->bridges.end(), [&](const Edge& b) {
      return owner[b.tail] == leaf || owner[b.head] == leaf;
    });
    auto succ = [&](Vertex v) {
      for (int id : work.out_edges(v)) {
        const Vertex h = work.edge(id).head;
        if (owner[h] == owner[v]) return h;
      }
      return v;
    };
    auto pred = [&](Vertex v) {
      for (int id : work.in_edges(v)) {
        const Vertex u = work.edge(id).tail;
        if (owner[u] == owner[v]) return u;
      }
      return v;
    };
    D11Step step{"leaf-tree", {}, {{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}, bridge}, {}};
    if (owner[bridge.tail] == leaf) {
      const Vertex x = bridge.tail;
      const Vertex x2 = bridge.head;
      step.added = {bridge, {succ(x), succ(succ(x))}};
      step.removed.push_back({x2, succ(x2)});
    } else {
      const Vertex x = bridge.head;
      const Vertex x2 = bridge.tail;
      step.added = {bridge, {succ(x), pred(x)}};
      step.removed.push_back({pred(x2), x2});
    }
    step.added = make_edge_set(std::move(step.added));
    step.removed = make_edge_set(std::move(step.removed));
    apply_step(d, work, kept, std::move(step), trace);
  }
  return extend_p3free_to_cut(d, kept);
}

}  // namespace dicut
