#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dicut/digraph.hpp"

namespace dicut {

// Undirected multigraph with stable edge ids. Used for underlying graphs,
// bipartite link graphs and contraction graphs.
class UndirectedGraph {
 public:
  struct Incidence {
    int neighbor;
    int edge;
  };

  explicit UndirectedGraph(int n = 0);

  int n() const { return static_cast<int>(adjacency_.size()); }
  int m() const { return static_cast<int>(ends_.size()); }

  int add_edge(int u, int v);
  const std::pair<int, int>& ends(int edge) const {
    return ends_[static_cast<std::size_t>(edge)];
  }
  const std::vector<Incidence>& incident(int v) const {
    return adjacency_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

 private:
  std::vector<std::vector<Incidence>> adjacency_;
  std::vector<std::pair<int, int>> ends_;
};

// One undirected edge per arc; antiparallel arcs become parallel edges.
// Edge id i of the result corresponds to arc id i of `d`.
UndirectedGraph underlying_graph(const Digraph& d);

// Closed walk without repeated vertices: edges[i] joins vertices[i] and
// vertices[(i + 1) % size].
struct UndirectedCycle {
  std::vector<int> vertices;
  std::vector<int> edges;
};

// A shortest cycle (parallel edges form 2-cycles). Ties are broken by the
// smallest BFS root, then by discovery order.
std::optional<UndirectedCycle> shortest_cycle(const UndirectedGraph& g);

// Shortest path between two vertices avoiding one edge id (-1 for none).
// Returns the edge ids along the path, or nullopt if disconnected.
std::optional<std::vector<int>> shortest_path_edges(const UndirectedGraph& g, int from, int to,
                                                    int banned_edge = -1,
                                                    const std::vector<char>* allowed = nullptr);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const UndirectedGraph& g);

// Proper 2-coloring (0/1) if the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const UndirectedGraph& g);

}  // namespace dicut
