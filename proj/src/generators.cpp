#include "dicut/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dicut/errors.hpp"

namespace dicut {

Digraph gen_example1(int k) {
  if (k < 1) throw PreconditionError("gen_example1: k must be at least 1");
  // Layout: y_0, then (u_i, v_i, w_i, x_i, y_i) for i = 1..k, then u_{k+1},
  // then z_0..z_k.
  const int y0 = 0;
  auto u = [](int i) { return 1 + 5 * (i - 1); };
  auto y = [&](int i) { return i == 0 ? y0 : u(i) + 4; };
  const int u_last = 5 * k + 1;
  auto u_at = [&](int i) { return i == k + 1 ? u_last : u(i); };
  auto z = [&](int i) { return 5 * k + 2 + i; };
  const int n = 6 * k + 3;

  std::vector<Edge> edges;
  for (int i = 1; i <= k; ++i) {
    const int ui = u(i);
    const int vi = ui + 1;
    const int wi = ui + 2;
    const int xi = ui + 3;
    const int yi = ui + 4;
    edges.insert(edges.end(), {{ui, vi}, {vi, wi}, {wi, xi}, {xi, yi}, {vi, xi}});
  }
  for (int i = 0; i <= k; ++i) {
    edges.insert(edges.end(), {{y(i), u_at(i + 1)}, {u_at(i + 1), z(i)}, {z(i), y(i)}});
  }
  Digraph d(n, std::move(edges));
  if (d.m() != 8 * k + 3) throw AlgorithmError("gen_example1: wrong edge count");
  return d;
}

Digraph gen_regular_tournament(int k) {
  if (k < 1) throw PreconditionError("gen_regular_tournament: k must be at least 1");
  const int n = 2 * k + 1;
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = 1; j <= k; ++j) edges.push_back({i, (i + j) % n});
  }
  return Digraph(n, std::move(edges));
}

Digraph gen_example2() {
  std::vector<Edge> edges;
  for (int offset : {0, 5}) {
    for (int i = 0; i < 5; ++i) {
      for (int j = 1; j <= 2; ++j) edges.push_back({offset + i, offset + (i + j) % 5});
    }
  }
  for (int a = 0; a < 5; ++a) {
    for (int b = 5; b < 10; ++b) edges.push_back({a, b});
  }
  return Digraph(10, std::move(edges));
}

Digraph gen_transitive_tournament(int n) {
  if (n < 0) throw PreconditionError("gen_transitive_tournament: negative n");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Digraph(n, std::move(edges));
}

std::optional<RandomFamily> parse_random_family(std::string_view name) {
  if (name == "d11") return RandomFamily::D11;
  if (name == "d11-trianglefree") return RandomFamily::D11TriangleFree;
  if (name == "dkk") return RandomFamily::Dkk;
  if (name == "acyclic-dkk") return RandomFamily::AcyclicDkk;
  if (name == "disjoint-triangles") return RandomFamily::DisjointTriangles;
  return std::nullopt;
}

std::string_view family_name(RandomFamily family) {
  switch (family) {
    case RandomFamily::D11: return "d11";
    case RandomFamily::D11TriangleFree: return "d11-trianglefree";
    case RandomFamily::Dkk: return "dkk";
    case RandomFamily::AcyclicDkk: return "acyclic-dkk";
    case RandomFamily::DisjointTriangles: return "disjoint-triangles";
  }
  return "unknown";
}

namespace {

Digraph random_disjoint_triangles(const RandomParams& p, std::mt19937_64& rng) {
  const int t = p.t > 0 ? p.t : p.n / 3;
  const int n = std::max(p.n, 3 * t);
  if (t < 1) throw PreconditionError("disjoint-triangles: need at least 3 vertices");
  std::vector<int> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int i = 0; i < t; ++i) {
    const int a = label[3 * i];
    const int b = label[3 * i + 1];
    const int c = label[3 * i + 2];
    edges.insert(edges.end(), {{a, b}, {b, c}, {c, a}});
  }
  return Digraph(n, std::move(edges));
}

}  // namespace

Digraph gen_random_family(RandomFamily family, const RandomParams& p) {
  std::mt19937_64 rng(p.seed);
  if (family == RandomFamily::DisjointTriangles) return random_disjoint_triangles(p, rng);

  const int n = p.n;
  if (n < 0) throw PreconditionError("random family: negative n");
  int k = p.k;
  if (family == RandomFamily::D11 || family == RandomFamily::D11TriangleFree) k = 1;
  if (k < 0) throw PreconditionError("random family: negative k");
  if (n < 2) return Digraph(n);

  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::shuffle(rank.begin(), rank.end(), rng);

  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<int> indeg(n, 0);
  std::vector<int> outdeg(n, 0);
  std::vector<Edge> edges;

  auto fits = [&](int in, int out) { return in <= k || out <= k; };
  auto closes_triangle = [&](int u, int v) {
    for (int w = 0; w < n; ++w) {
      if (adj[v][w] && adj[w][u]) return true;
    }
    return false;
  };

  std::uniform_int_distribution<int> pick(0, n - 1);
  const long long pairs = static_cast<long long>(n) * (n - 1);
  std::uniform_int_distribution<long long> budget_dist(n / 2 + 1, std::max<long long>(n + 1, 2 * pairs));
  const long long budget = budget_dist(rng);
  for (long long attempt = 0; attempt < budget; ++attempt) {
    const int u = pick(rng);
    const int v = pick(rng);
    if (u == v || adj[u][v] || adj[v][u]) continue;
    if (family == RandomFamily::AcyclicDkk && rank[u] > rank[v]) continue;
    if (!fits(indeg[u], outdeg[u] + 1) || !fits(indeg[v] + 1, outdeg[v])) continue;
    if (family == RandomFamily::D11TriangleFree && closes_triangle(u, v)) continue;
    adj[u][v] = 1;
    ++outdeg[u];
    ++indeg[v];
    edges.push_back({u, v});
  }
  return Digraph(n, std::move(edges));
}

}  // namespace dicut
