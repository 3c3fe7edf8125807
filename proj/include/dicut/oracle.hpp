#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "dicut/digraph.hpp"
#include "dicut/graph_core.hpp"

namespace dicut {

// Guards for the exponential searches. Exceeding one raises ResourceError;
// results are never silently truncated.
struct OracleLimits {
  int max_cut_vertices = 26;
  int max_triangles = 4096;
  int max_removal_edges = 64;
  int max_decompose_vertices = 10;
  int max_decompose_parts = 4;
  std::int64_t max_search_nodes = 200'000'000;
};

// Maximum directed cut by enumerating all 2^n bipartitions in Gray-code order.
// Among maximizers the lexicographically smallest sorted X is returned.
CutCertificate max_dicut_exact(const Digraph& d, const OracleLimits& limits = {});

// Maximum number of vertex-disjoint directed triangles, with a witness.
std::vector<Triangle> max_triangle_packing_witness(const Digraph& d,
                                                   const OracleLimits& limits = {});
int max_triangle_packing(const Digraph& d, const OracleLimits& limits = {});

// Smallest R with d \ R in D(k-1, k-1). Requires d in D(k, k) and k >= 1.
EdgeSet min_removal_exact(const Digraph& d, int k, const OracleLimits& limits = {});

// Partition of E(d) into `parts.size()` arc sets, each contained in the
// matching directed cut certificate.
struct CutDecomposition {
  std::vector<EdgeSet> parts;
  std::vector<CutCertificate> cuts;
};

// Exact search for a partition of E(d) into c cut-compatible parts; nullopt
// when none exists.
std::optional<CutDecomposition> decompose_into_cuts(const Digraph& d, int c,
                                                    const OracleLimits& limits = {});

// Smallest c admitting a decomposition (0 for an edgeless digraph).
int min_cut_decomposition(const Digraph& d, const OracleLimits& limits = {});

}  // namespace dicut
