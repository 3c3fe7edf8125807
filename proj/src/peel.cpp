#include "dicut/peel.hpp"

#include <algorithm>
#include <string>

#include "dicut/errors.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/undirected.hpp"

namespace dicut {

namespace {

// Degrees of D \ R and of R, indexed by vertex, plus R membership by arc id.
struct View {
  const Digraph& d;
  int k;
  const std::vector<char>& white;
  const std::vector<char>& black;
  std::vector<char> in_r;
  std::vector<int> din, dout, rin, rout;

  View(const Digraph& g, const RemovalState& s)
      : d(g), k(s.k), white(s.white), black(s.black), in_r(g.m(), 0), din(g.n()), dout(g.n()),
        rin(g.n(), 0), rout(g.n(), 0) {
    for (const Edge& e : s.r) {
      const auto id = g.edge_id(e);
      if (!id || in_r[*id]) throw AlgorithmError("removal set holds an arc outside the digraph");
      in_r[*id] = 1;
      ++rout[e.tail];
      ++rin[e.head];
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      din[v] = g.in_degree(v) - rin[v];
      dout[v] = g.out_degree(v) - rout[v];
    }
  }

  bool ok(Vertex v) const { return din[v] <= k - 1 || dout[v] <= k - 1; }
  bool tail_critical(Vertex x) const { return dout[x] == k - 1 && din[x] >= k; }
  bool head_critical(Vertex y) const { return din[y] == k - 1 && dout[y] >= k; }
  bool is_arrow(const Edge& e) const { return black[e.tail] || white[e.head]; }

  void set(int id, bool member) {
    const Edge& e = d.edge(id);
    const int delta = member ? 1 : -1;
    in_r[id] = member ? 1 : 0;
    rout[e.tail] += delta;
    rin[e.head] += delta;
    dout[e.tail] -= delta;
    din[e.head] -= delta;
  }

  int score() const {
    int s = 0;
    for (int id = 0; id < d.m(); ++id) s += in_r[id] && is_arrow(d.edge(id)) ? 1 : 0;
    return s;
  }
  int size() const { return static_cast<int>(std::count(in_r.begin(), in_r.end(), 1)); }
};

void require_dkk(const Digraph& d, int k, const char* what) {
  if (k < 1) throw PreconditionError(std::string(what) + ": k must be at least 1");
  if (!in_class(d, k, k)) {
    throw PreconditionError(std::string(what) + ": digraph is not in D(" + std::to_string(k) + "," +
                            std::to_string(k) + ")");
  }
}

// Removes `remove` from R, then repairs each infeasible vertex of `touched`
// with one arrow (black-tail first). Returns the rewrite if the result is
// feasible and strictly lowers (|R|, -score).
std::optional<Rewrite> try_swap(View view, const std::vector<int>& remove, VertexSet touched,
                                MoveKind kind) {
  const int size_before = view.size();
  const int score_before = view.score();
  Rewrite rw;
  rw.kind = kind;
  for (int id : remove) {
    view.set(id, false);
    rw.remove.push_back(view.d.edge(id));
  }
  touched = make_vertex_set(std::move(touched));
  for (Vertex v : touched) {
    if (view.ok(v)) continue;
    int arrow = -1;
    if (view.black[v]) {
      for (int id : view.d.out_edges(v)) {
        if (!view.in_r[id]) {
          arrow = id;
          break;
        }
      }
    }
    if (arrow < 0 && view.white[v]) {
      for (int id : view.d.in_edges(v)) {
        if (!view.in_r[id]) {
          arrow = id;
          break;
        }
      }
    }
    if (arrow < 0) return std::nullopt;
    view.set(arrow, true);
    rw.add.push_back(view.d.edge(arrow));
  }
  for (Vertex v : touched) {
    if (!view.ok(v)) return std::nullopt;
  }
  const int size_after = view.size();
  const int score_after = view.score();
  if (size_after > size_before || (size_after == size_before && score_after <= score_before)) {
    return std::nullopt;
  }
  rw.remove = make_edge_set(std::move(rw.remove));
  rw.add = make_edge_set(std::move(rw.add));
  // An arc removed and re-added cancels out.
  const EdgeSet both = set_intersection(rw.remove, rw.add);
  rw.remove = set_difference(rw.remove, both);
  rw.add = set_difference(rw.add, both);
  return rw;
}

std::vector<int> r_ids(const View& view) {
  std::vector<int> ids;
  for (int id = 0; id < view.d.m(); ++id) {
    if (view.in_r[id]) ids.push_back(id);
  }
  return ids;
}

// Undirected graph of R on the vertices of D; edge i is R arc ids[i].
UndirectedGraph r_graph(const View& view, const std::vector<int>& ids) {
  UndirectedGraph g(view.d.n());
  for (int id : ids) g.add_edge(view.d.edge(id).tail, view.d.edge(id).head);
  return g;
}

VertexSet endpoints(const Digraph& d, const std::vector<int>& ids) {
  VertexSet vs;
  for (int id : ids) {
    vs.push_back(d.edge(id).tail);
    vs.push_back(d.edge(id).head);
  }
  return vs;
}

std::optional<Rewrite> return_edge(const View& view, const std::vector<int>& ids) {
  for (int id : ids) {
    const Edge& e = view.d.edge(id);
    if (!view.tail_critical(e.tail) && !view.head_critical(e.head)) {
      return Rewrite{{e}, {}, MoveKind::ReturnEdge};
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> cycle_recolor(const View& view, const std::vector<int>& ids,
                                     const UndirectedGraph& g) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Edge& e = view.d.edge(ids[i]);
    if (view.is_arrow(e)) continue;
    const auto path = shortest_path_edges(g, e.head, e.tail, static_cast<int>(i));
    if (!path) continue;
    std::vector<int> cycle{ids[i]};
    for (int pe : *path) cycle.push_back(ids[pe]);
    if (auto rw = try_swap(view, cycle, endpoints(view.d, cycle), MoveKind::CycleRecolorSwap)) {
      return rw;
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> tree_path(const View& view, const std::vector<int>& ids,
                                 const UndirectedGraph& g) {
  std::vector<char> critical(view.d.n(), 0);
  std::vector<char> touched(view.d.n(), 0);
  for (int id : ids) {
    const Edge& e = view.d.edge(id);
    touched[e.tail] = touched[e.head] = 1;
    if (view.tail_critical(e.tail)) critical[e.tail] = 1;
    if (view.head_critical(e.head)) critical[e.head] = 1;
  }
  for (const auto& comp : connected_components(g)) {
    std::vector<Vertex> loose;
    for (Vertex v : comp) {
      if (touched[v] && !critical[v]) loose.push_back(v);
    }
    if (loose.size() < 2) continue;
    const auto path = shortest_path_edges(g, loose[0], loose[1]);
    if (!path) continue;
    std::vector<int> arcs;
    for (int pe : *path) arcs.push_back(ids[pe]);
    if (auto rw = try_swap(view, arcs, endpoints(view.d, arcs), MoveKind::TreePathSwap)) return rw;
  }
  return std::nullopt;
}

// Vertex z with two R-arcs whose far ends stay feasible when the arc returns.
std::optional<Rewrite> two_arc_swap(const View& view) {
  const Digraph& d = view.d;
  for (Vertex z = 0; z < d.n(); ++z) {
    for (bool outgoing : {true, false}) {
      std::vector<int> slack;
      bool all_same_side = true;
      for (int id : outgoing ? d.out_edges(z) : d.in_edges(z)) {
        if (!view.in_r[id]) continue;
        const Vertex h = outgoing ? d.edge(id).head : d.edge(id).tail;
        // Returning the arc raises the indegree (outgoing) or outdegree of h.
        const bool same_side =
            outgoing ? view.white[h] && view.rin[h] >= 2 : view.black[h] && view.rout[h] >= 2;
        const bool other_side =
            outgoing ? view.black[h] && view.rout[h] >= 1 : view.white[h] && view.rin[h] >= 1;
        if (!same_side && !other_side) continue;
        if (slack.size() < 2) {
          slack.push_back(id);
          all_same_side = all_same_side && same_side;
        }
      }
      if (slack.size() < 2) continue;
      const MoveKind kind = all_same_side ? MoveKind::AlternatingCycleSwap : MoveKind::ShortPathSwap;
      if (auto rw = try_swap(view, slack, endpoints(d, slack), kind)) return rw;
    }
  }
  return std::nullopt;
}

std::optional<Rewrite> growth(const View& view, const std::vector<int>& ids) {
  for (int id : ids) {
    const Edge& e = view.d.edge(id);
    if (view.is_arrow(e)) continue;
    if (auto rw = try_swap(view, {id}, {e.tail, e.head}, MoveKind::GrowthSwap)) return rw;
  }
  return std::nullopt;
}

}  // namespace

std::string_view move_name(MoveKind kind) {
  switch (kind) {
    case MoveKind::ReturnEdge: return "return-edge";
    case MoveKind::CycleRecolorSwap: return "cycle-recolor-swap";
    case MoveKind::TreePathSwap: return "tree-path-swap";
    case MoveKind::AlternatingCycleSwap: return "alternating-cycle-swap";
    case MoveKind::ShortPathSwap: return "short-path-swap";
    case MoveKind::GrowthSwap: return "growth-swap";
  }
  return "unknown";
}

RemovalState initial_removal(const Digraph& d, int k) {
  require_dkk(d, k, "initial_removal");
  RemovalState s{k, {}, std::vector<char>(d.n()), std::vector<char>(d.n())};
  for (Vertex v = 0; v < d.n(); ++v) {
    s.white[v] = d.in_degree(v) <= k ? 1 : 0;
    s.black[v] = d.out_degree(v) <= k ? 1 : 0;
  }
  View view(d, s);
  for (Vertex v = 0; v < d.n(); ++v) {
    if (view.ok(v)) continue;
    const bool use_in = s.white[v];
    for (int id : use_in ? d.in_edges(v) : d.out_edges(v)) {
      if (view.ok(v)) break;
      if (!view.in_r[id]) view.set(id, true);
    }
  }
  for (int id : r_ids(view)) s.r.push_back(d.edge(id));
  return s;
}

bool is_feasible(const Digraph& d, const RemovalState& state) {
  const View view(d, state);
  for (Vertex v = 0; v < d.n(); ++v) {
    if (!view.ok(v)) return false;
  }
  return true;
}

VertexSet critical_vertices(const Digraph& d, const RemovalState& state, const Edge& e) {
  const View view(d, state);
  VertexSet c;
  if (view.tail_critical(e.tail)) c.push_back(e.tail);
  if (view.head_critical(e.head)) c.push_back(e.head);
  return make_vertex_set(std::move(c));
}

VertexSet critical_set(const Digraph& d, const RemovalState& state) {
  const View view(d, state);
  VertexSet c;
  for (const Edge& e : state.r) {
    if (view.tail_critical(e.tail)) c.push_back(e.tail);
    if (view.head_critical(e.head)) c.push_back(e.head);
  }
  return make_vertex_set(std::move(c));
}

int arrow_score(const RemovalState& state) {
  int s = 0;
  for (const Edge& e : state.r) s += state.black[e.tail] || state.white[e.head] ? 1 : 0;
  return s;
}

std::optional<Rewrite> find_improvement(const Digraph& d, const RemovalState& state) {
  const View view(d, state);
  const auto ids = r_ids(view);
  if (auto rw = return_edge(view, ids)) return rw;
  const UndirectedGraph g = r_graph(view, ids);
  if (auto rw = cycle_recolor(view, ids, g)) return rw;
  if (auto rw = tree_path(view, ids, g)) return rw;
  if (auto rw = two_arc_swap(view)) return rw;
  return growth(view, ids);
}

RemovalState apply_rewrite(const RemovalState& state, const Rewrite& rw) {
  RemovalState next = state;
  next.r = set_union(set_difference(state.r, rw.remove), rw.add);
  return next;
}

PeelResult peel_to_lower_class(const Digraph& d, int k) { return peel_from(d, initial_removal(d, k)); }

PeelResult peel_from(const Digraph& d, RemovalState state) {
  const int k = state.k;
  require_dkk(d, k, "peel_from");
  if (!is_feasible(d, state)) throw PreconditionError("peel_from: starting state is not feasible");
  PeelResult result;
  result.initial_size = static_cast<int>(state.r.size());
  const long long move_limit = static_cast<long long>(d.m()) * (d.m() + 1) + 1;
  while (auto rw = find_improvement(d, state)) {
    RemovalState next = apply_rewrite(state, *rw);
    const auto size = [](const RemovalState& s) { return s.r.size(); };
    const bool decreased = size(next) < size(state) ||
                           (size(next) == size(state) && arrow_score(next) > arrow_score(state));
    if (!decreased) throw AlgorithmError("peel: move did not decrease the potential");
    if (!is_feasible(d, next)) throw AlgorithmError("peel: move broke D(k-1,k-1) membership");
    state = std::move(next);
    result.moves.push_back(std::move(*rw));
    if (static_cast<long long>(result.moves.size()) > move_limit) {
      throw AlgorithmError("peel: move limit exceeded");
    }
  }
  const int r = static_cast<int>(state.r.size());
  if (static_cast<int>(critical_set(d, state).size()) < r) {
    throw AlgorithmError("peel: fixpoint has fewer critical vertices than removed arcs");
  }
  if (r * (2 * k + 1) > 2 * d.m()) throw AlgorithmError("peel: removal set exceeds 2m/(2k+1)");
  result.removed = state.r;
  result.kept = d.without(state.r);
  return result;
}

}  // namespace dicut
