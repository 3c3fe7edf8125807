#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dicut/digraph.hpp"

namespace dicut {

// k chorded five-vertex paths chained by k+1 directed triangles:
// 6k+3 vertices, 8k+3 arcs, connected, in D(1,1).
Digraph gen_example1(int k);

// Two rotational 5-tournaments with all 25 arcs from the first to the second.
Digraph gen_example2();

// Rotational tournament on 2k+1 vertices: i beats i+1, ..., i+k (mod 2k+1).
Digraph gen_regular_tournament(int k);

// Transitive tournament on n vertices: i -> j for all i < j.
Digraph gen_transitive_tournament(int n);

enum class RandomFamily { D11, D11TriangleFree, Dkk, AcyclicDkk, DisjointTriangles };

std::optional<RandomFamily> parse_random_family(std::string_view name);
std::string_view family_name(RandomFamily family);

struct RandomParams {
  int n = 10;
  int k = 1;  // class bound for the dkk families
  int t = 0;  // triangle count for disjoint-triangles (0: n / 3)
  std::uint64_t seed = 1;
};

// Digon-free member of the requested family, deterministic in the seed.
// Arcs are proposed uniformly at random and kept while the class invariant
// holds; the proposal budget itself is drawn from the seed so densities vary
// from sparse to saturated.
Digraph gen_random_family(RandomFamily family, const RandomParams& params);

}  // namespace dicut
