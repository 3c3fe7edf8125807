#pragma once

#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/undirected.hpp"

namespace dicut {

// Colour of each edge (by edge id), in 0..delta-1.
using EdgeColoring = std::vector<int>;

// Proper edge colouring of a bipartite multigraph with at most `delta`
// colours, by insertion with alternating-path swaps. Throws InputError if
// the graph is not bipartite or has a vertex of degree above delta.
EdgeColoring bipartite_edge_coloring(const UndirectedGraph& g, int delta);

bool is_proper_edge_coloring(const UndirectedGraph& g, const EdgeColoring& colors, int delta);

enum class ForwardArcs { AllToFirst, Alternate };

// Arc-disjoint D1 in D(p1,p1) and D2 in D(p2,p2) covering D, with one
// shared (X, Y): in D_j every x in X has indegree <= p_j and every y in Y
// has outdegree <= p_j.
struct SplitResult {
  Digraph d1;
  Digraph d2;
  ClassPartition part1;
  ClassPartition part2;
};

// Requires D in D(p1+p2, p1+p2) and p1, p2 >= 0 (PreconditionError).
// X -> Y arcs are unconstrained: by default all go to D1 (to D2 when p1 = 0).
SplitResult split_dkk(const Digraph& d, int p1, int p2, ForwardArcs forward = ForwardArcs::AllToFirst);

// Number of directed cuts known to suffice for covering D in D(2,2):
// 0 when edgeless, 3 in D(1,1), 6 otherwise.
int cut_cover_hint(const Digraph& d);

}  // namespace dicut
