#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dicut/digraph.hpp"

namespace dicut {

// Witness that a digraph lies in D(k, ell): every x in X has indegree <= k
// and every y in Y has outdegree <= ell.
struct ClassPartition {
  int k = 0;
  int ell = 0;
  VertexSet x;
  VertexSet y;
};

// Vertex bipartition (X, Y) together with the arcs it cuts.
struct CutCertificate {
  VertexSet x;
  VertexSet y;
  EdgeSet cut_edges;
  int size = 0;
};

// Vertices meeting both bounds go to X. Absent iff some vertex has
// indegree > k and outdegree > ell.
std::optional<ClassPartition> class_partition(const Digraph& d, int k, int ell);
bool in_class(const Digraph& d, int k, int ell);
bool is_valid_class_partition(const Digraph& d, const ClassPartition& p);

// Smallest k with d in D(k, k).
int min_symmetric_class(const Digraph& d);

// No vertex is the head of one arc of `s` and the tail of another, with three
// distinct vertices involved. Throws InputError if an arc of `s` is not in `d`.
bool is_p3_free(const Digraph& d, const EdgeSet& s);

// Stronger form: no vertex is both a head and a tail in `s`. Equivalent to
// `s` being contained in some directed cut (P3-free and no digon).
bool is_cut_compatible(const Digraph& d, const EdgeSet& s);

// X = tails of s, Y = everything else. Throws PreconditionError when `s` is
// not cut-compatible.
CutCertificate extend_p3free_to_cut(const Digraph& d, const EdgeSet& s);

CutCertificate cut_from_partition(const Digraph& d, const VertexSet& x);

// Recomputes the cut from (X, Y) and compares with the stored arcs and size.
bool verify_certificate(const Digraph& d, const CutCertificate& cut);

using Triangle = std::array<Vertex, 3>;  // a -> b -> c -> a, a smallest

// Weakly connected components containing at least one arc, ordered by
// smallest vertex. Isolated vertices are omitted.
std::vector<VertexSet> edge_components(const Digraph& d);
// All weakly connected components including singletons.
std::vector<VertexSet> weak_components(const Digraph& d);
// True when all arcs lie in a single weak component (isolated vertices allowed).
bool is_connected(const Digraph& d);

std::vector<Triangle> directed_triangles(const Digraph& d);
bool has_digon(const Digraph& d);
bool is_acyclic(const Digraph& d);

struct StructureSummary {
  std::vector<VertexSet> components;
  std::vector<Triangle> triangles;
  std::optional<std::vector<Vertex>> undirected_cycle;
  bool has_digon = false;
};
StructureSummary structural_queries(const Digraph& d);

// Subgraph induced on `vertices`, relabelled 0..|vertices|-1 in ascending order.
struct LocalGraph {
  Digraph graph;
  std::vector<Vertex> to_global;
};
LocalGraph induced_subgraph(const Digraph& d, const VertexSet& vertices);
// Arcs of `d` with both ends in `vertices`.
EdgeSet induced_edges(const Digraph& d, const VertexSet& vertices);

}  // namespace dicut
