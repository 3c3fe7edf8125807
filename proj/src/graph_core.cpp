#include "dicut/graph_core.hpp"

#include <algorithm>
#include <string>

#include "dicut/errors.hpp"
#include "dicut/undirected.hpp"

namespace dicut {

std::optional<ClassPartition> class_partition(const Digraph& d, int k, int ell) {
  if (k < 0 || ell < 0) throw PreconditionError("class bounds must be non-negative");
  ClassPartition p{k, ell, {}, {}};
  for (Vertex v = 0; v < d.n(); ++v) {
    if (d.in_degree(v) <= k) {
      p.x.push_back(v);
    } else if (d.out_degree(v) <= ell) {
      p.y.push_back(v);
    } else {
      return std::nullopt;
    }
  }
  return p;
}

bool in_class(const Digraph& d, int k, int ell) { return class_partition(d, k, ell).has_value(); }

bool is_valid_class_partition(const Digraph& d, const ClassPartition& p) {
  std::vector<int> seen(d.n(), 0);
  for (Vertex v : p.x) {
    if (v < 0 || v >= d.n() || seen[v]++ || d.in_degree(v) > p.k) return false;
  }
  for (Vertex v : p.y) {
    if (v < 0 || v >= d.n() || seen[v]++ || d.out_degree(v) > p.ell) return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

int min_symmetric_class(const Digraph& d) {
  int k = 0;
  for (Vertex v = 0; v < d.n(); ++v) k = std::max(k, std::min(d.in_degree(v), d.out_degree(v)));
  return k;
}

namespace {

void require_edges_present(const Digraph& d, const EdgeSet& s) {
  for (const Edge& e : s) {
    if (!d.has_edge(e)) {
      throw InputError("edge " + std::to_string(e.tail) + " " + std::to_string(e.head) +
                       " is not in the digraph");
    }
  }
}

}  // namespace

bool is_p3_free(const Digraph& d, const EdgeSet& s) {
  require_edges_present(d, s);
  std::vector<std::vector<Vertex>> tails_into(d.n());
  std::vector<std::vector<Vertex>> heads_out(d.n());
  for (const Edge& e : s) {
    tails_into[e.head].push_back(e.tail);
    heads_out[e.tail].push_back(e.head);
  }
  for (Vertex v = 0; v < d.n(); ++v) {
    for (Vertex a : tails_into[v]) {
      for (Vertex b : heads_out[v]) {
        if (a != b) return false;
      }
    }
  }
  return true;
}

bool is_cut_compatible(const Digraph& d, const EdgeSet& s) {
  require_edges_present(d, s);
  std::vector<char> is_tail(d.n(), 0);
  for (const Edge& e : s) is_tail[e.tail] = 1;
  return std::none_of(s.begin(), s.end(), [&](const Edge& e) { return is_tail[e.head]; });
}

CutCertificate extend_p3free_to_cut(const Digraph& d, const EdgeSet& s) {
  if (!is_cut_compatible(d, s)) {
    throw PreconditionError("edge set is not contained in any directed cut");
  }
  std::vector<char> in_x(d.n(), 0);
  for (const Edge& e : s) in_x[e.tail] = 1;
  VertexSet x;
  for (Vertex v = 0; v < d.n(); ++v) {
    if (in_x[v]) x.push_back(v);
  }
  return cut_from_partition(d, x);
}

CutCertificate cut_from_partition(const Digraph& d, const VertexSet& x) {
  std::vector<char> in_x(d.n(), 0);
  for (Vertex v : x) {
    if (v < 0 || v >= d.n()) throw InputError("partition vertex out of range");
    in_x[v] = 1;
  }
  CutCertificate cut;
  for (Vertex v = 0; v < d.n(); ++v) (in_x[v] ? cut.x : cut.y).push_back(v);
  for (const Edge& e : d.edges()) {
    if (in_x[e.tail] && !in_x[e.head]) cut.cut_edges.push_back(e);
  }
  cut.size = static_cast<int>(cut.cut_edges.size());
  return cut;
}

bool verify_certificate(const Digraph& d, const CutCertificate& cut) {
  std::vector<int> seen(d.n(), 0);
  for (Vertex v : cut.x) {
    if (v < 0 || v >= d.n() || seen[v]++) return false;
  }
  for (Vertex v : cut.y) {
    if (v < 0 || v >= d.n() || seen[v]++) return false;
  }
  if (!std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; })) return false;
  const CutCertificate fresh = cut_from_partition(d, make_vertex_set(cut.x));
  return fresh.cut_edges == cut.cut_edges && fresh.size == cut.size &&
         cut.size == static_cast<int>(cut.cut_edges.size());
}

std::vector<VertexSet> weak_components(const Digraph& d) {
  return connected_components(underlying_graph(d));
}

std::vector<VertexSet> edge_components(const Digraph& d) {
  std::vector<VertexSet> out;
  for (auto& c : weak_components(d)) {
    if (c.size() > 1) out.push_back(std::move(c));
  }
  return out;
}

bool is_connected(const Digraph& d) { return edge_components(d).size() <= 1; }

std::vector<Triangle> directed_triangles(const Digraph& d) {
  std::vector<Triangle> out;
  for (Vertex a = 0; a < d.n(); ++a) {
    for (int e1 : d.out_edges(a)) {
      const Vertex b = d.edge(e1).head;
      if (b <= a) continue;
      for (int e2 : d.out_edges(b)) {
        const Vertex c = d.edge(e2).head;
        if (c <= a || c == b) continue;
        if (d.has_edge(c, a)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

bool has_digon(const Digraph& d) {
  return std::any_of(d.edges().begin(), d.edges().end(),
                     [&](const Edge& e) { return d.has_edge(e.head, e.tail); });
}

bool is_acyclic(const Digraph& d) {
  std::vector<int> indeg(d.n());
  std::vector<Vertex> ready;
  for (Vertex v = 0; v < d.n(); ++v) {
    indeg[v] = d.in_degree(v);
    if (indeg[v] == 0) ready.push_back(v);
  }
  int removed = 0;
  while (!ready.empty()) {
    const Vertex v = ready.back();
    ready.pop_back();
    ++removed;
    for (int id : d.out_edges(v)) {
      if (--indeg[d.edge(id).head] == 0) ready.push_back(d.edge(id).head);
    }
  }
  return removed == d.n();
}

StructureSummary structural_queries(const Digraph& d) {
  StructureSummary s;
  s.components = edge_components(d);
  s.triangles = directed_triangles(d);
  s.has_digon = has_digon(d);
  if (auto cycle = shortest_cycle(underlying_graph(d))) s.undirected_cycle = cycle->vertices;
  return s;
}

LocalGraph induced_subgraph(const Digraph& d, const VertexSet& vertices) {
  std::vector<int> local(d.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Vertex v : vertices) {
    for (int id : d.out_edges(v)) {
      const Vertex h = d.edge(id).head;
      if (local[h] >= 0) edges.push_back({local[v], local[h]});
    }
  }
  return {Digraph(static_cast<int>(vertices.size()), std::move(edges)), vertices};
}

EdgeSet induced_edges(const Digraph& d, const VertexSet& vertices) {
  std::vector<char> member(d.n(), 0);
  for (Vertex v : vertices) member[v] = 1;
  EdgeSet out;
  for (const Edge& e : d.edges()) {
    if (member[e.tail] && member[e.head]) out.push_back(e);
  }
  return out;
}

}  // namespace dicut
