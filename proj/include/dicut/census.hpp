#pragma once

#include <cstdint>
#include <vector>

#include "dicut/digraph.hpp"

namespace dicut {

// Canonical adjacency code of a digraph on at most 8 vertices: the minimum
// row-major adjacency bitmask over all relabellings compatible with an
// iterated degree refinement. Isomorphic digraphs share the code.
std::uint64_t canonical_code(const Digraph& d);
Digraph from_canonical_code(int n, std::uint64_t code);

// One representative per isomorphism class of digon-free digraphs on exactly
// n vertices (isolated vertices allowed) lying in D(k, ell). Built by
// single-vertex extension, which is complete because D(k, ell) is closed
// under vertex deletion. n <= 8.
std::vector<Digraph> enumerate_class(int n, int k, int ell);

}  // namespace dicut
