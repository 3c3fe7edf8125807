#include "dicut/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "dicut/errors.hpp"

namespace dicut {

EdgeSet make_edge_set(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

VertexSet make_vertex_set(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

bool contains(const EdgeSet& set, const Edge& e) {
  return std::binary_search(set.begin(), set.end(), e);
}

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet set_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet reversed(const EdgeSet& edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) out.push_back(e.reversed());
  return make_edge_set(std::move(out));
}

Digraph::Digraph(int n) : Digraph(n, {}) {}

Digraph::Digraph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw InputError("negative vertex count");
  for (const Edge& e : edges) {
    if (e.tail < 0 || e.tail >= n || e.head < 0 || e.head >= n) {
      throw InputError("edge " + std::to_string(e.tail) + " " + std::to_string(e.head) +
                       " has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (e.tail == e.head) throw InputError("loop at vertex " + std::to_string(e.tail));
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw InputError("duplicate edge " + std::to_string(dup->tail) + " " +
                     std::to_string(dup->head));
  }
  edges_ = std::move(edges);

  const auto nn = n;
  out_offset_.assign(nn + 1, 0);
  in_offset_.assign(nn + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offset_[static_cast<std::size_t>(e.tail) + 1];
    ++in_offset_[static_cast<std::size_t>(e.head) + 1];
  }
  std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());
  std::partial_sum(in_offset_.begin(), in_offset_.end(), in_offset_.begin());

  out_ids_.resize(edges_.size());
  std::iota(out_ids_.begin(), out_ids_.end(), 0);
  in_ids_.resize(edges_.size());
  std::vector<int> fill(in_offset_.begin(), in_offset_.end() - 1);
  for (int id = 0; id < m(); ++id) {
    in_ids_[static_cast<std::size_t>(fill[static_cast<std::size_t>(edges_[id].head)]++)] = id;
  }
}

std::span<const int> Digraph::out_edges(Vertex v) const {
  const auto b = static_cast<std::size_t>(out_offset_[v]);
  const auto e = static_cast<std::size_t>(out_offset_[v + 1]);
  return std::span<const int>(out_ids_).subspan(b, e - b);
}

std::span<const int> Digraph::in_edges(Vertex v) const {
  const auto b = static_cast<std::size_t>(in_offset_[v]);
  const auto e = static_cast<std::size_t>(in_offset_[v + 1]);
  return std::span<const int>(in_ids_).subspan(b, e - b);
}

std::optional<int> Digraph::edge_id(Vertex tail, Vertex head) const {
  const Edge key{tail, head};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

Digraph Digraph::without(const EdgeSet& removed) const {
  return Digraph(n_, set_difference(edges_, make_edge_set(removed)));
}

Digraph Digraph::restricted_to(const EdgeSet& kept) const {
  for (const Edge& e : kept) {
    if (!has_edge(e)) {
      throw InputError("edge " + std::to_string(e.tail) + " " + std::to_string(e.head) +
                       " is not in the digraph");
    }
  }
  return Digraph(n_, make_edge_set(kept));
}

Digraph Digraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(edges_.size());
  for (const Edge& e : edges_) rev.push_back(e.reversed());
  return Digraph(n_, std::move(rev));
}

}  // namespace dicut
