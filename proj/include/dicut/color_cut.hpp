#pragma once

#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/rational.hpp"
#include "dicut/undirected.hpp"

namespace dicut {

struct DegeneracyOrder {
  std::vector<int> order;  // removal order, smallest current degree first
  int degeneracy = 0;
};

DegeneracyOrder degeneracy_order(const UndirectedGraph& g);

// Greedy colouring along the reverse removal order; uses at most
// degeneracy + 1 colours, numbered from 0.
std::vector<int> greedy_coloring(const UndirectedGraph& g, const DegeneracyOrder& order);

bool is_proper_coloring(const UndirectedGraph& g, const std::vector<int>& colors);

// floor(gamma^2 / 4) / C(gamma, 2); 1 for gamma <= 1.
Rational balanced_split_ratio(int gamma);

struct ClassBipartition {
  std::vector<int> group;  // colour classes placed on side S, ascending
  VertexSet s;
  VertexSet t;
  int crossing = 0;
};

// Tries every placement of floor(gamma/2) colour classes on side S and keeps
// the one with most bichromatic crossing edges (lexicographically smallest
// group on ties). `gamma` defaults to the number of colours used. Throws
// InputError on an improper colouring.
ClassBipartition best_balanced_class_bipartition(const UndirectedGraph& g,
                                                 const std::vector<int>& colors, int gamma = -1);

// Larger of the two directed cuts between S and V \ S; S -> T on ties.
CutCertificate better_oriented_cut(const Digraph& d, const VertexSet& s);

// Cut of size at least (k+1)m/(4k+2) for acyclic D in D(k,k).
CutCertificate dicut_acyclic(const Digraph& d, int k);

struct CyclePeelStep {
  std::vector<Vertex> cycle;
  VertexSet x_c;
  VertexSet y_c;
  EdgeSet f_c;
  EdgeSet e_c;
};

struct D22Trace {
  std::vector<CyclePeelStep> steps;
  int base_degeneracy = 0;
  int base_colors = 0;
};

// Cut of size at least 3m/10 for D in D(2,2).
CutCertificate dicut_d22(const Digraph& d, D22Trace* trace = nullptr);

}  // namespace dicut
