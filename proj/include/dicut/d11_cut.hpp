#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/graph_core.hpp"

namespace dicut {

// V+ = {d+ >= 2}, V- = {d- >= 2}, V0 = the rest.
struct PlusMinus {
  VertexSet plus;
  VertexSet minus;
  VertexSet zero;
};

// Requires D in D(1,1) without digons (PreconditionError otherwise).
PlusMinus plus_minus(const Digraph& d);

// A triangle x -> y -> z -> x with d-(x) = 1 and d+(y) = 1; `edge` is xy.
struct TriangleReduction {
  Edge edge;
  Triangle triangle;
};

std::optional<TriangleReduction> find_triangle_reduction(const Digraph& d);

enum class PairPattern {
  LeafInMinus,
  LeafInPlus,
  EvenCycle,
  V0AttachInEdge,
  V0AttachSource,
  MultiedgeInM,
  GammaCycle,
  PathOrCycle,
};

std::string_view pattern_name(PairPattern p);

// Disjoint arc sets: A is contained in a cut and every directed P3 with one
// arc in A has its other arc in B.
struct ReducingPair {
  EdgeSet a;
  EdgeSet b;
  PairPattern pattern = PairPattern::LeafInMinus;
  bool mirrored = false;        // built on the reversed digraph
  std::vector<Vertex> cycle;    // cycle the construction was anchored on, if any
  VertexSet l_set;              // chosen (l+1)-sets, if any
  std::vector<Vertex> path;     // path through a plus cycle, if any
};

// Smallest B making (A, B) closed: in-arcs at tails of A and out-arcs at
// heads of A, minus A itself.
EdgeSet closure_of(const Digraph& d, const EdgeSet& a);

// Closure property, disjointness, A cut-compatible and 2|B| <= 3|A|.
bool is_valid_reducing_pair(const Digraph& d, const EdgeSet& a, const EdgeSet& b);

// Requires D in D(1,1), digon-free, connected, no triangle reduction and
// m >= 6. Throws AlgorithmError if no pattern yields a valid pair.
ReducingPair find_reducing_pair(const Digraph& d);

// One reduction step of the D(1,1) algorithms.
struct D11Step {
  std::string tag;  // "oracle", "triangle", "leaf-tree" or a pair pattern name
  EdgeSet added;
  EdgeSet removed;  // arcs deleted from the working digraph (includes `added`)
  EdgeSet pair_b;   // B of a reducing pair, empty otherwise
};

struct D11Trace {
  std::vector<D11Step> steps;
};

// Cut of size at least (2m - t)/5, t the maximum number of vertex-disjoint
// directed triangles. Requires D in D(1,1) and digon-free.
CutCertificate dicut_d11(const Digraph& d, D11Trace* trace = nullptr);

struct TriangleForestShape {
  std::vector<Triangle> triangles;
  EdgeSet bridges;
};

// Vertices (those with an arc) split into directed triangles joined by a
// tree of t - 1 bridges. Requires D connected, in D(1,1), digon-free.
std::optional<TriangleForestShape> is_triangle_forest(const Digraph& d);

// Cut of size at least 7m/20 for connected D in D(1,1) other than the
// directed triangle.
CutCertificate dicut_d11_connected(const Digraph& d, D11Trace* trace = nullptr);

}  // namespace dicut
