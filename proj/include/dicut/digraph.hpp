#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

namespace dicut {

using Vertex = int;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  Edge reversed() const { return {head, tail}; }
};

// Sorted, duplicate-free vertex and edge collections. Every set-valued output
// in the library uses these so results are deterministic.
using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<Edge>;

EdgeSet make_edge_set(std::vector<Edge> edges);
VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool contains(const EdgeSet& set, const Edge& e);
bool contains(const VertexSet& set, Vertex v);
EdgeSet set_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet reversed(const EdgeSet& edges);

// Loopless digraph without parallel arcs on vertices 0..n-1. Antiparallel
// pairs (digons) are representable. Edge ids are positions in the sorted edge
// list, so the out-edges of a vertex occupy a contiguous id range.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  // Throws InputError on loops, duplicates or out-of-range endpoints.
  Digraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  int m() const { return static_cast<int>(edges_.size()); }

  const EdgeSet& edges() const { return edges_; }
  const Edge& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }

  std::span<const int> out_edges(Vertex v) const;
  std::span<const int> in_edges(Vertex v) const;
  int out_degree(Vertex v) const { return static_cast<int>(out_edges(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in_edges(v).size()); }
  int degree(Vertex v) const { return out_degree(v) + in_degree(v); }

  std::optional<int> edge_id(Vertex tail, Vertex head) const;
  std::optional<int> edge_id(const Edge& e) const { return edge_id(e.tail, e.head); }
  bool has_edge(Vertex tail, Vertex head) const { return edge_id(tail, head).has_value(); }
  bool has_edge(const Edge& e) const { return has_edge(e.tail, e.head); }

  // Same vertex set, edges minus `removed` (entries absent from the graph are ignored).
  Digraph without(const EdgeSet& removed) const;
  // Same vertex set, only the given edges (each must be present).
  Digraph restricted_to(const EdgeSet& kept) const;
  Digraph reversed() const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  EdgeSet edges_;
  std::vector<int> out_offset_;
  std::vector<int> in_offset_;
  std::vector<int> in_ids_;
  std::vector<int> out_ids_;
};

}  // namespace dicut
