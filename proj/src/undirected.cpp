#include "dicut/undirected.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "dicut/errors.hpp"

namespace dicut {

UndirectedGraph::UndirectedGraph(int n) : adjacency_(n) {}

int UndirectedGraph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n() || v >= n()) throw InputError("edge endpoint out of range");
  if (u == v) throw InputError("self-loop in undirected graph");
  const int id = m();
  ends_.emplace_back(u, v);
  adjacency_[u].push_back({v, id});
  adjacency_[v].push_back({u, id});
  return id;
}

UndirectedGraph underlying_graph(const Digraph& d) {
  UndirectedGraph g(d.n());
  for (const Edge& e : d.edges()) g.add_edge(e.tail, e.head);
  return g;
}

std::optional<UndirectedCycle> shortest_cycle(const UndirectedGraph& g) {
  const int n = g.n();
  std::optional<UndirectedCycle> best;
  std::vector<int> dist(n);
  std::vector<int> parent_edge(n);
  std::vector<int> parent(n);

  auto path_to_root = [&](int v) {
    std::vector<int> path{v};
    while (parent[v] >= 0) {
      v = parent[v];
      path.push_back(v);
    }
    return path;
  };

  for (int root = 0; root < n; ++root) {
    if (g.degree(root) < 2) continue;
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::fill(parent_edge.begin(), parent_edge.end(), -1);
    dist[root] = 0;
    std::queue<int> queue;
    queue.push(root);
    const int best_len = best ? static_cast<int>(best->vertices.size()) : std::numeric_limits<int>::max();
    bool done = false;
    while (!queue.empty() && !done) {
      const int u = queue.front();
      queue.pop();
      if (2 * dist[u] >= best_len) break;
      for (const auto& inc : g.incident(u)) {
        if (inc.edge == parent_edge[u]) continue;
        const int w = inc.neighbor;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          parent_edge[w] = inc.edge;
          queue.push(w);
          continue;
        }
        const int len = dist[u] + dist[w] + 1;
        const int current = best ? static_cast<int>(best->vertices.size())
                                 : std::numeric_limits<int>::max();
        if (len >= current) continue;
        auto pu = path_to_root(u);
        auto pw = path_to_root(w);
        // The two tree paths must meet only at the root.
        std::vector<int> su(pu.begin(), pu.end() - 1), sw(pw.begin(), pw.end() - 1);
        std::sort(su.begin(), su.end());
        std::sort(sw.begin(), sw.end());
        std::vector<int> common;
        std::set_intersection(su.begin(), su.end(), sw.begin(), sw.end(),
                              std::back_inserter(common));
        if (!common.empty()) continue;
        UndirectedCycle cycle;
        // root ... u, then w ... back to root
        std::vector<int> forward(pu.rbegin(), pu.rend());
        for (int v : forward) cycle.vertices.push_back(v);
        for (int v : pw) {
          if (v != root) cycle.vertices.push_back(v);
        }
        for (std::size_t i = 1; i < forward.size(); ++i) {
          cycle.edges.push_back(parent_edge[static_cast<std::size_t>(forward[i])]);
        }
        cycle.edges.push_back(inc.edge);
        for (int v : pw) {
          if (v != root) cycle.edges.push_back(parent_edge[v]);
        }
        best = std::move(cycle);
        if (static_cast<int>(best->vertices.size()) <= 2) done = true;
      }
    }
  }
  return best;
}

std::optional<std::vector<int>> shortest_path_edges(const UndirectedGraph& g, int from, int to,
                                                    int banned_edge,
                                                    const std::vector<char>* allowed) {
  std::vector<int> parent_edge(static_cast<std::size_t>(g.n()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::queue<int> queue;
  queue.push(from);
  seen[from] = 1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    if (u == to) break;
    for (const auto& inc : g.incident(u)) {
      if (inc.edge == banned_edge) continue;
      if (allowed && !(*allowed)[static_cast<std::size_t>(inc.edge)]) continue;
      if (seen[static_cast<std::size_t>(inc.neighbor)]) continue;
      seen[static_cast<std::size_t>(inc.neighbor)] = 1;
      parent_edge[static_cast<std::size_t>(inc.neighbor)] = inc.edge;
      queue.push(inc.neighbor);
    }
  }
  if (!seen[to]) return std::nullopt;
  std::vector<int> path;
  for (int v = to; v != from;) {
    const int e = parent_edge[v];
    path.push_back(e);
    const auto& [a, b] = g.ends(e);
    v = (a == v) ? b : a;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<std::vector<int>> connected_components(const UndirectedGraph& g) {
  std::vector<int> label(static_cast<std::size_t>(g.n()), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n(); ++s) {
    if (label[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    label[s] = id;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (const auto& inc : g.incident(u)) {
        if (label[static_cast<std::size_t>(inc.neighbor)] < 0) {
          label[static_cast<std::size_t>(inc.neighbor)] = id;
          stack.push_back(inc.neighbor);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::optional<std::vector<int>> two_coloring(const UndirectedGraph& g) {
  std::vector<int> side(static_cast<std::size_t>(g.n()), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(u)) {
        auto& sv = side[static_cast<std::size_t>(inc.neighbor)];
        if (sv < 0) {
          sv = 1 - side[u];
          stack.push_back(inc.neighbor);
        } else if (sv == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

}  // namespace dicut
