#include "dicut/census.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

#include "dicut/errors.hpp"
#include "dicut/graph_core.hpp"

namespace dicut {

namespace {

constexpr int kMaxCensusVertices = 8;

// Stable colour refinement; colours are ranks of isomorphism-invariant
// signatures, so equal inputs up to relabelling give equal colour classes.
std::vector<int> refine(const Digraph& d) {
  const int n = d.n();
  std::vector<int> color(n);
  {
    std::vector<std::pair<int, int>> sig(n);
    for (int v = 0; v < n; ++v) sig[v] = {d.in_degree(v), d.out_degree(v)};
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
  }
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> outs;
      std::vector<int> ins;
      for (int id : d.out_edges(v)) outs.push_back(color[d.edge(id).head]);
      for (int id : d.in_edges(v)) ins.push_back(color[d.edge(id).tail]);
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
      sig[v].push_back(color[v]);
      sig[v].push_back(-1);
      sig[v].insert(sig[v].end(), outs.begin(), outs.end());
      sig[v].push_back(-2);
      sig[v].insert(sig[v].end(), ins.begin(), ins.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(n);
    for (int v = 0; v < n; ++v) {
      next[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    }
    const auto classes = [](const std::vector<int>& c) {
      return c.empty() ? 0 : *std::max_element(c.begin(), c.end()) + 1;
    };
    const bool stable = classes(next) == classes(color);
    color = std::move(next);
    if (stable) return color;
  }
}

std::uint64_t code_for(const Digraph& d, const std::vector<int>& position) {
  const int n = d.n();
  std::uint64_t code = 0;
  for (const Edge& e : d.edges()) {
    code |= std::uint64_t{1} << (position[e.tail] * n + position[e.head]);
  }
  return code;
}

}  // namespace

std::uint64_t canonical_code(const Digraph& d) {
  const int n = d.n();
  if (n > kMaxCensusVertices) throw ResourceError("canonical_code: at most 8 vertices");
  const auto color = refine(d);
  // Cells in colour order; positions are assigned cell by cell.
  std::vector<std::vector<int>> cells;
  {
    std::map<int, std::vector<int>> by_color;
    for (int v = 0; v < n; ++v) by_color[color[v]].push_back(v);
    for (auto& [c, members] : by_color) cells.push_back(members);
  }
  std::vector<int> position(n);
  std::uint64_t best = ~std::uint64_t{0};
  auto assign = [&](auto&& self, std::size_t cell, int base) -> void {
    if (cell == cells.size()) {
      best = std::min(best, code_for(d, position));
      return;
    }
    auto& members = cells[cell];
    std::sort(members.begin(), members.end());
    do {
      for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = base + static_cast<int>(i);
      self(self, cell + 1, base + static_cast<int>(members.size()));
    } while (std::next_permutation(members.begin(), members.end()));
  };
  assign(assign, 0, 0);
  return best;
}

Digraph from_canonical_code(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (code & (std::uint64_t{1} << (u * n + v))) edges.push_back({u, v});
    }
  }
  return Digraph(n, std::move(edges));
}

std::vector<Digraph> enumerate_class(int n, int k, int ell) {
  if (n < 0 || n > kMaxCensusVertices) throw ResourceError("enumerate_class: n must be in [0, 8]");
  std::vector<Digraph> level{Digraph(0)};
  for (int size = 1; size <= n; ++size) {
    std::unordered_set<std::uint64_t> seen;
    std::vector<Digraph> next;
    const int old = size - 1;
    int patterns = 1;
    for (int i = 0; i < old; ++i) patterns *= 3;
    for (const Digraph& base : level) {
      for (int pattern = 0; pattern < patterns; ++pattern) {
        std::vector<Edge> edges(base.edges().begin(), base.edges().end());
        int code = pattern;
        for (int v = 0; v < old; ++v) {
          const int state = code % 3;
          code /= 3;
          if (state == 1) edges.push_back({old, v});
          if (state == 2) edges.push_back({v, old});
        }
        Digraph candidate(size, std::move(edges));
        if (!in_class(candidate, k, ell)) continue;
        const auto canon = canonical_code(candidate);
        if (seen.insert(canon).second) next.push_back(from_canonical_code(size, canon));
      }
    }
    std::sort(next.begin(), next.end(), [](const Digraph& a, const Digraph& b) {
      if (a.m() != b.m()) return a.m() < b.m();
      return a.edges() < b.edges();
    });
    level = std::move(next);
  }
  return level;
}

}  // namespace dicut
