#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "dicut/digraph.hpp"

namespace dicut {

// Removal set R for lowering D(k,k) to D(k-1,k-1). Vertex colours are taken
// from the original digraph: white = indegree <= k, black = outdegree <= k.
struct RemovalState {
  int k = 1;
  EdgeSet r;
  std::vector<char> white;
  std::vector<char> black;
};

enum class MoveKind {
  ReturnEdge,            // an arc of R without critical endpoint goes back
  CycleRecolorSwap,      // cycle of R through a non-arrow arc traded for arrows
  TreePathSwap,          // path between two non-critical vertices traded for arrows
  AlternatingCycleSwap,  // two R-arcs at a vertex whose other ends are slack, both white
  ShortPathSwap,         // as above with a slack black end
  GrowthSwap,            // single non-arrow arc traded for one arrow
};

std::string_view move_name(MoveKind kind);

struct Rewrite {
  EdgeSet remove;  // leaves R
  EdgeSet add;     // joins R
  MoveKind kind = MoveKind::ReturnEdge;
};

// Greedy feasible R. Requires D in D(k,k) and k >= 1.
RemovalState initial_removal(const Digraph& d, int k);

bool is_feasible(const Digraph& d, const RemovalState& state);
// Critical endpoints of an arc of R (subset of {tail, head}).
VertexSet critical_vertices(const Digraph& d, const RemovalState& state, const Edge& e);
// Union over all arcs of R.
VertexSet critical_set(const Digraph& d, const RemovalState& state);
// Arcs of R that are black-tail or white-head arrows.
int arrow_score(const RemovalState& state);

// First applicable move in the order ReturnEdge, CycleRecolorSwap,
// TreePathSwap, the two-arc swaps, GrowthSwap. Every returned rewrite keeps
// D \ R in D(k-1,k-1) and strictly decreases (|R|, -arrow score).
std::optional<Rewrite> find_improvement(const Digraph& d, const RemovalState& state);

RemovalState apply_rewrite(const RemovalState& state, const Rewrite& rw);

struct PeelResult {
  Digraph kept;
  EdgeSet removed;
  int initial_size = 0;
  std::vector<Rewrite> moves;
};

// Local search to a fixpoint. Asserts feasibility and potential decrease at
// every move, and |Crit(R)| >= |R| and |R| <= floor(2m/(2k+1)) at the end
// (AlgorithmError on violation).
PeelResult peel_to_lower_class(const Digraph& d, int k);
// Same local search from a caller-supplied feasible state.
PeelResult peel_from(const Digraph& d, RemovalState state);

}  // namespace dicut
