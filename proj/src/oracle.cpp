#include "dicut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "dicut/errors.hpp"

namespace dicut {

namespace {

// Lexicographic order of the sorted member lists of two vertex masks.
bool lex_less(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const std::uint64_t diff = a ^ b;
  const int v = std::countr_zero(diff);
  const std::uint64_t above = (v >= 63) ? 0 : ~((std::uint64_t{1} << (v + 1)) - 1);
  if (a & (std::uint64_t{1} << v)) {
    // a has v where b has a larger element or nothing at all.
    return (b & above) != 0;
  }
  return (a & above) == 0;
}

void count_node(std::int64_t& nodes, const OracleLimits& limits, const char* what) {
  if (++nodes > limits.max_search_nodes) {
    throw ResourceError(std::string(what) + ": search node budget exceeded");
  }
}

}  // namespace

CutCertificate max_dicut_exact(const Digraph& d, const OracleLimits& limits) {
  const int n = d.n();
  if (n > limits.max_cut_vertices || n > 62) {
    throw ResourceError("max_dicut_exact: " + std::to_string(n) + " vertices exceeds guard " +
                        std::to_string(limits.max_cut_vertices));
  }
  std::vector<char> in_x(n, 0);
  std::uint64_t mask = 0;
  std::uint64_t best_mask = 0;
  int cut = 0;
  int best = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int v = std::countr_zero(i);
    int out_to_y = 0;
    int in_from_x = 0;
    for (int id : d.out_edges(v)) out_to_y += !in_x[d.edge(id).head];
    for (int id : d.in_edges(v)) in_from_x += in_x[d.edge(id).tail];
    if (in_x[v]) {
      cut += in_from_x - out_to_y;
      in_x[v] = 0;
    } else {
      cut += out_to_y - in_from_x;
      in_x[v] = 1;
    }
    mask ^= std::uint64_t{1} << v;
    if (cut > best || (cut == best && lex_less(mask, best_mask))) {
      best = cut;
      best_mask = mask;
    }
  }
  VertexSet x;
  for (int v = 0; v < n; ++v) {
    if (best_mask & (std::uint64_t{1} << v)) x.push_back(v);
  }
  return cut_from_partition(d, x);
}

std::vector<Triangle> max_triangle_packing_witness(const Digraph& d, const OracleLimits& limits) {
  const auto triangles = directed_triangles(d);
  if (static_cast<int>(triangles.size()) > limits.max_triangles) {
    throw ResourceError("max_triangle_packing: too many triangles (" +
                        std::to_string(triangles.size()) + ")");
  }
  std::vector<std::vector<int>> through(d.n());
  for (int t = 0; t < static_cast<int>(triangles.size()); ++t) {
    for (Vertex v : triangles[t]) through[v].push_back(t);
  }
  std::vector<char> used(d.n(), 0);
  std::vector<int> chosen;
  std::vector<int> best;
  std::int64_t nodes = 0;

  auto free_triangle = [&](int t) {
    return std::none_of(triangles[t].begin(), triangles[t].end(),
                        [&](Vertex v) { return used[v]; });
  };

  auto search = [&](auto&& self) -> void {
    count_node(nodes, limits, "max_triangle_packing");
    // Vertices still coverable by some free triangle bound what remains.
    int coverable = 0;
    Vertex pivot = -1;
    for (Vertex v = 0; v < d.n(); ++v) {
      if (used[v]) continue;
      if (std::any_of(through[v].begin(), through[v].end(), free_triangle)) {
        ++coverable;
        if (pivot < 0) pivot = v;
      }
    }
    if (static_cast<int>(chosen.size()) > static_cast<int>(best.size())) best = chosen;
    if (pivot < 0) return;
    if (static_cast<int>(chosen.size()) + coverable / 3 <= static_cast<int>(best.size())) return;
    for (int t : through[pivot]) {
      if (!free_triangle(t)) continue;
      for (Vertex v : triangles[t]) used[v] = 1;
      chosen.push_back(t);
      self(self);
      chosen.pop_back();
      for (Vertex v : triangles[t]) used[v] = 0;
    }
    used[pivot] = 1;
    self(self);
    used[pivot] = 0;
  };
  search(search);

  std::vector<Triangle> out;
  for (int t : best) out.push_back(triangles[t]);
  std::sort(out.begin(), out.end());
  return out;
}

int max_triangle_packing(const Digraph& d, const OracleLimits& limits) {
  return static_cast<int>(max_triangle_packing_witness(d, limits).size());
}

EdgeSet min_removal_exact(const Digraph& d, int k, const OracleLimits& limits) {
  if (k < 1) throw PreconditionError("min_removal_exact: k must be at least 1");
  if (!in_class(d, k, k)) throw PreconditionError("min_removal_exact: digraph not in D(k,k)");
  if (d.m() > limits.max_removal_edges) {
    throw ResourceError("min_removal_exact: " + std::to_string(d.m()) +
                        " edges exceeds guard " + std::to_string(limits.max_removal_edges));
  }
  const int n = d.n();
  std::vector<int> kin(n);
  std::vector<int> kout(n);
  for (Vertex v = 0; v < n; ++v) {
    kin[v] = d.in_degree(v);
    kout[v] = d.out_degree(v);
  }
  std::vector<char> removed(d.m(), 0);
  std::vector<char> excluded(d.m(), 0);
  std::int64_t nodes = 0;
  // After removal every vertex needs indegree <= k-1 or outdegree <= k-1.
  auto violating = [&](Vertex v) { return kin[v] >= k && kout[v] >= k; };

  auto search = [&](auto&& self, int budget) -> bool {
    count_node(nodes, limits, "min_removal_exact");
    Vertex pivot = -1;
    int bad = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (violating(v)) {
        ++bad;
        if (pivot < 0) pivot = v;
      }
    }
    if (pivot < 0) return true;
    if ((bad + 1) / 2 > budget) return false;
    std::vector<int> candidates;
    for (int id : d.in_edges(pivot)) candidates.push_back(id);
    for (int id : d.out_edges(pivot)) candidates.push_back(id);
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> newly_excluded;
    bool found = false;
    for (int id : candidates) {
      if (removed[id] || excluded[id]) continue;
      const Edge& e = d.edge(id);
      removed[id] = 1;
      --kout[e.tail];
      --kin[e.head];
      found = self(self, budget - 1);
      if (found) break;
      removed[id] = 0;
      ++kout[e.tail];
      ++kin[e.head];
      excluded[id] = 1;
      newly_excluded.push_back(id);
    }
    for (int id : newly_excluded) excluded[id] = 0;
    return found;
  };

  for (int budget = 0; budget <= d.m(); ++budget) {
    if (search(search, budget)) {
      EdgeSet out;
      for (int id = 0; id < d.m(); ++id) {
        if (removed[id]) out.push_back(d.edge(id));
      }
      return out;
    }
  }
  throw AlgorithmError("min_removal_exact: removing every edge must succeed");
}

std::optional<CutDecomposition> decompose_into_cuts(const Digraph& d, int c,
                                                    const OracleLimits& limits) {
  if (c < 0) throw PreconditionError("decompose_into_cuts: negative part count");
  if (d.n() > limits.max_decompose_vertices || c > limits.max_decompose_parts) {
    throw ResourceError("decompose_into_cuts: n = " + std::to_string(d.n()) + ", c = " +
                        std::to_string(c) + " exceeds guard");
  }
  const int m = d.m();
  if (m == 0) {
    CutDecomposition empty;
    for (int j = 0; j < c; ++j) {
      empty.parts.emplace_back();
      empty.cuts.push_back(cut_from_partition(d, {}));
    }
    return empty;
  }
  if (c == 0) return std::nullopt;

  // Two arcs conflict when they cannot share a cut: the head of one is the tail
  // of the other.
  std::vector<std::vector<int>> conflicts(m);
  for (int a = 0; a < m; ++a) {
    const Edge& ea = d.edge(a);
    for (int b : d.out_edges(ea.head)) {
      conflicts[a].push_back(b);
      conflicts[b].push_back(a);
    }
  }
  for (auto& list : conflicts) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }

  std::vector<int> color(m, -1);
  std::int64_t nodes = 0;
  auto search = [&](auto&& self, int colored, int used_colors) -> bool {
    count_node(nodes, limits, "decompose_into_cuts");
    if (colored == m) return true;
    // DSATUR pivot: most distinct neighbouring colors, then most conflicts.
    int pivot = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int e = 0; e < m; ++e) {
      if (color[e] >= 0) continue;
      unsigned seen = 0;
      for (int f : conflicts[e]) {
        if (color[f] >= 0) seen |= 1u << color[f];
      }
      const int sat = std::popcount(seen);
      const int deg = static_cast<int>(conflicts[e].size());
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pivot = e;
        best_sat = sat;
        best_deg = deg;
      }
    }
    const int limit = std::min(c, used_colors + 1);
    for (int col = 0; col < limit; ++col) {
      bool clash = false;
      for (int f : conflicts[pivot]) {
        if (color[f] == col) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      color[pivot] = col;
      if (self(self, colored + 1, std::max(used_colors, col + 1))) return true;
      color[pivot] = -1;
    }
    return false;
  };
  if (!search(search, 0, 0)) return std::nullopt;

  CutDecomposition out;
  out.parts.resize(c);
  for (int e = 0; e < m; ++e) out.parts[color[e]].push_back(d.edge(e));
  for (auto& part : out.parts) out.cuts.push_back(extend_p3free_to_cut(d, part));
  return out;
}

int min_cut_decomposition(const Digraph& d, const OracleLimits& limits) {
  for (int c = 0; c <= limits.max_decompose_parts; ++c) {
    if (decompose_into_cuts(d, c, limits)) return c;
  }
  throw ResourceError("min_cut_decomposition: more than " +
                      std::to_string(limits.max_decompose_parts) + " cuts needed");
}

}  // namespace dicut
