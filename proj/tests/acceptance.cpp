// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.

#include <bit>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dicut/census.hpp"
#include "dicut/color_cut.hpp"
#include "dicut/d11_cut.hpp"
#include "dicut/decompose.hpp"
#include "dicut/generators.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/oracle.hpp"
#include "dicut/peel.hpp"
#include "dicut/rational.hpp"
#include "support.hpp"
#include "trace_checks.hpp"

using namespace dicut;
using namespace dicut::testing;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

#define REQUIRE(cond, msg)                  \
  do {                                      \
    if (!(cond)) return Outcome{false, msg}; \
  } while (0)

const std::vector<Digraph>& d11_up_to(int max_n) {
  static std::vector<Digraph> all;
  static int have = 0;
  for (int n = have + 1; n <= max_n; ++n) {
    for (const Digraph& d : enumerate_class(n, 1, 1)) all.push_back(d);
    have = n;
  }
  return all;
}

std::vector<Digraph> random_d11(int count, int max_n, std::uint64_t seed0) {
  std::vector<Digraph> out;
  for (int i = 0; i < count; ++i) {
    RandomParams p;
    p.seed = seed0 + static_cast<std::uint64_t>(i);
    p.n = 3 + static_cast<int>(p.seed % static_cast<std::uint64_t>(max_n - 2));
    out.push_back(gen_random_family(i % 2 == 0 ? RandomFamily::D11 : RandomFamily::D11TriangleFree, p));
  }
  return out;
}

bool is_directed_triangle(const Digraph& d) { return d.m() == 3 && naive_triangles(d).size() == 1; }

std::string str(long v) { return std::to_string(v); }

Outcome d11_bound() {
  std::vector<Digraph> inputs = d11_up_to(6);
  const auto rnd = random_d11(500, 12, 1000);
  inputs.insert(inputs.end(), rnd.begin(), rnd.end());
  for (const Digraph& d : inputs) {
    D11Trace trace;
    const CutCertificate c = dicut_d11(d, &trace);
    REQUIRE(naive_certificate_ok(d, c), "certificate does not re-check");
    const long t = max_triangle_packing(d);
    REQUIRE(c.size >= ceil_div(2L * d.m() - t, 5), "cut below (2m - t)/5");
    REQUIRE(c.size <= max_dicut_exact(d).size, "cut above the optimum");
  }
  return {true, str(static_cast<long>(inputs.size())) + " instances (exhaustive n <= 6 plus 500 random n <= 12)"};
}

Outcome connected_d11_bound() {
  std::vector<Digraph> inputs;
  for (const Digraph& d : d11_up_to(6)) inputs.push_back(d);
  for (const Digraph& d : random_d11(500, 12, 1000)) {
    inputs.push_back(d);
    for (const VertexSet& comp : edge_components(d)) inputs.push_back(induced_subgraph(d, comp).graph);
  }
  long checked = 0;
  for (const Digraph& d : inputs) {
    if (d.m() == 0 || !is_connected(d) || is_directed_triangle(d)) continue;
    const CutCertificate c = dicut_d11_connected(d);
    REQUIRE(naive_certificate_ok(d, c), "certificate does not re-check");
    REQUIRE(c.size >= ceil_div(7L * d.m(), 20), "cut below 7m/20");
    REQUIRE(c.size <= max_dicut_exact(d).size, "cut above the optimum");
    ++checked;
  }
  return {true, str(checked) + " connected non-triangle instances"};
}

Outcome example1_tightness() {
  for (int k = 1; k <= 3; ++k) {
    const Digraph d = gen_example1(k);
    REQUIRE(d.m() == 8 * k + 3, "edge count differs from 8k+3");
    const int opt = max_dicut_exact(d).size;
    REQUIRE(opt == 3 * k + 1, "maximum cut differs from 3k+1");
    REQUIRE(opt == naive_max_dicut(d), "oracles disagree");
    REQUIRE(Rational(opt, d.m()) == Rational(3L * d.m() - 1, 8L * d.m()), "c_max differs from (3m-1)/(8m)");
    REQUIRE(Rational(opt, d.m()) < Rational(3, 8), "c_max not below 3/8");
  }
  return {true, "k = 1, 2, 3: cut 4, 7, 10 on 11, 19, 27 arcs"};
}

Outcome third_characterization() {
  long unions = 0;
  const auto& all = d11_up_to(6);
  for (const Digraph& d : all) {
    const bool union_of_triangles = d.m() == 3 * naive_triangle_packing(d);
    const bool at_most_third = 3 * max_dicut_exact(d).size <= d.m();
    REQUIRE(union_of_triangles == at_most_third, "characterization fails");
    unions += union_of_triangles ? 1 : 0;
  }
  return {true, str(static_cast<long>(all.size())) + " instances, " + str(unions) + " triangle unions"};
}

Outcome triangle_free_bound() {
  long checked = 0;
  for (std::uint64_t seed = 1; checked < 300; ++seed) {
    RandomParams p;
    p.seed = 5000 + seed;
    p.n = 3 + static_cast<int>(seed % 10);
    const Digraph d = gen_random_family(RandomFamily::D11TriangleFree, p);
    REQUIRE(naive_triangles(d).empty(), "generator produced a triangle");
    const CutCertificate c = dicut_d11(d);
    REQUIRE(naive_certificate_ok(d, c), "certificate does not re-check");
    REQUIRE(c.size >= ceil_div(2L * d.m(), 5), "cut below 2m/5");
    ++checked;
  }
  return {true, str(checked) + " triangle-free seeds, n <= 12"};
}

Outcome class_split() {
  const std::pair<int, int> splits[] = {{1, 1}, {1, 2}, {2, 2}};
  long checked = 0;
  for (const auto& [p1, p2] : splits) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      RandomParams p;
      p.seed = seed;
      p.n = 3 + static_cast<int>(seed % 28);
      p.k = p1 + p2;
      const Digraph d = gen_random_family(RandomFamily::Dkk, p);
      const std::string err = check_split(d, split_dkk(d, p1, p2), p1, p2);
      REQUIRE(err.empty(), err);
      ++checked;
    }
  }
  return {true, str(checked) + " splits over (1,1), (1,2), (2,2), n <= 30"};
}

Outcome peel_bound() {
  long checked = 0;
  for (int k = 2; k <= 3; ++k) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      RandomParams p;
      p.seed = seed;
      p.n = 3 + static_cast<int>(seed % 18);
      p.k = k;
      const Digraph d = gen_random_family(RandomFamily::Dkk, p);
      const RemovalState start = initial_removal(d, k);
      const PeelResult res = peel_from(d, start);
      const std::string err = check_peel(d, k, start, res);
      REQUIRE(err.empty(), err);
      ++checked;
    }
    const Digraph t = gen_regular_tournament(k);
    const PeelResult res = peel_to_lower_class(t, k);
    const long r = static_cast<long>(res.removed.size());
    REQUIRE(static_cast<int>(min_removal_exact(t, k).size()) == k + 1, "tournament minimum removal differs from k+1");
    REQUIRE(r >= k + 1 && r <= 2L * t.m() / (2 * k + 1), "tournament removal outside [k+1, 2m/(2k+1)]");
  }
  return {true, str(checked) + " random instances plus tournaments on 5 and 7 vertices"};
}

Outcome example2_no_cut() {
  const Digraph h = gen_example2();
  REQUIRE(h.m() == 45 && in_class(h, 2, 2), "gen_example2 shape wrong");
  for (std::uint32_t mask = 0; mask < (1U << h.n()); ++mask) {
    EdgeSet k;
    for (const Edge& e : h.edges()) {
      if ((mask >> e.tail & 1U) && !(mask >> e.head & 1U)) k.push_back(e);
    }
    REQUIRE(!naive_in_class(h.without(k), 1, 1), "a cut leaves the rest in D(1,1)");
  }
  return {true, "all 1024 bipartitions"};
}

Outcome balanced_bipartition_bound() {
  std::mt19937_64 rng(11);
  long checked = 0;
  for (int gamma = 3; gamma <= 8; ++gamma) {
    for (int iter = 0; iter < 100; ++iter) {
      const int n = gamma + static_cast<int>(rng() % 30);
      std::vector<int> colors(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) colors[v] = v < gamma ? v : static_cast<int>(rng() % static_cast<unsigned>(gamma));
      UndirectedGraph g(n);
      const unsigned density = 1 + static_cast<unsigned>(rng() % 9);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (colors[u] != colors[v] && rng() % 10 < density) g.add_edge(u, v);
        }
      }
      const ClassBipartition b = best_balanced_class_bipartition(g, colors);
      const long choose2 = static_cast<long>(gamma) * (gamma - 1) / 2;
      // crossing >= floor(gamma^2/4) / C(gamma, 2) * m, compared as integers.
      REQUIRE(static_cast<long>(b.crossing) * choose2 >= static_cast<long>(gamma) * gamma / 4 * g.m(),
              "crossing below the averaging bound");
      ++checked;
    }
  }
  return {true, str(checked) + " coloured graphs, gamma = 3..8"};
}

Outcome acyclic_bound() {
  long checked = 0;
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      RandomParams p;
      p.seed = seed;
      p.n = 2 + static_cast<int>(seed % 39);
      p.k = k;
      const Digraph d = gen_random_family(RandomFamily::AcyclicDkk, p);
      const CutCertificate c = dicut_acyclic(d, k);
      REQUIRE(naive_certificate_ok(d, c), "certificate does not re-check");
      REQUIRE(c.size >= ceil_div(static_cast<long>(k + 1) * d.m(), 4L * k + 2), "cut below (k+1)m/(4k+2)");
      ++checked;
    }
  }
  const Digraph tt5 = gen_transitive_tournament(5);
  REQUIRE(dicut_acyclic(tt5, 2).size >= 3, "transitive tournament cut below 3");
  REQUIRE(max_dicut_exact(tt5).size == 6, "transitive tournament optimum differs from 6");
  return {true, str(checked) + " random acyclic instances, k = 1..4, n <= 40; tt5 optimum 6"};
}

Outcome d22_bound() {
  long checked = 0;
  std::vector<Digraph> inputs;
  for (int n = 1; n <= 5; ++n) {
    for (const Digraph& d : enumerate_class(n, 2, 2)) inputs.push_back(d);
  }
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    RandomParams p;
    p.seed = 9000 + seed;
    p.n = 3 + static_cast<int>(seed % 12);
    p.k = 2;
    inputs.push_back(gen_random_family(RandomFamily::Dkk, p));
  }
  for (const Digraph& d : inputs) {
    const CutCertificate c = dicut_d22(d);
    REQUIRE(naive_certificate_ok(d, c), "certificate does not re-check");
    REQUIRE(c.size >= ceil_div(3L * d.m(), 10), "cut below 3m/10");
    REQUIRE(c.size <= max_dicut_exact(d).size, "cut above the optimum");
    ++checked;
  }
  REQUIRE(dicut_d22(gen_regular_tournament(2)).size == 3, "tournament on 5 vertices does not give exactly 3");
  return {true, str(checked) + " instances (exhaustive n <= 5 plus 300 random n <= 14); rt5 gives 3"};
}

Outcome three_cut_decomposition() {
  const auto& all = d11_up_to(6);
  for (const Digraph& d : all) {
    const auto dec = decompose_into_cuts(d, 3);
    REQUIRE(dec.has_value(), "no decomposition into three cuts");
    EdgeSet covered;
    for (std::size_t i = 0; i < dec->parts.size(); ++i) {
      REQUIRE(naive_contained_in_cut(d, dec->parts[i]), "part is not inside a cut");
      covered.insert(covered.end(), dec->parts[i].begin(), dec->parts[i].end());
    }
    std::sort(covered.begin(), covered.end());
    REQUIRE(covered == d.edges(), "parts do not partition the arcs");
  }
  REQUIRE(!decompose_into_cuts(gen_regular_tournament(2), 3), "tournament on 5 vertices splits into three cuts");
  return {true, str(static_cast<long>(all.size())) + " instances; rt5 needs more than three"};
}

Outcome step_level_properties() {
  long pairs = 0;
  long d11_steps = 0;
  std::vector<Digraph> inputs = d11_up_to(6);
  const auto rnd = random_d11(400, 16, 20000);
  inputs.insert(inputs.end(), rnd.begin(), rnd.end());
  for (const Digraph& d : inputs) {
    for (bool connected : {false, true}) {
      if (connected && (d.m() == 0 || !is_connected(d) || is_directed_triangle(d))) continue;
      D11Trace trace;
      if (connected) {
        dicut_d11_connected(d, &trace);
      } else {
        dicut_d11(d, &trace);
      }
      TraceTally tally;
      const std::string err = check_d11_trace(d, trace, &tally);
      REQUIRE(err.empty(), err);
      pairs += tally.pairs;
      d11_steps += tally.steps;
    }
  }
  long moves = 0;
  for (int k = 1; k <= 4; ++k) {
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
      RandomParams p;
      p.seed = seed;
      p.n = 3 + static_cast<int>(seed % 18);
      p.k = k;
      const Digraph d = gen_random_family(RandomFamily::Dkk, p);
      RemovalState start = initial_removal(d, k);
      EdgeSet pool = set_difference(d.edges(), start.r);
      for (std::size_t i = 0; i < seed % 6 && !pool.empty(); ++i) {
        start.r = set_union(start.r, {pool[(seed * 7 + i) % pool.size()]});
        pool = set_difference(d.edges(), start.r);
      }
      const PeelResult res = peel_from(d, start);
      const std::string err = check_peel(d, k, start, res);
      REQUIRE(err.empty(), err);
      moves += static_cast<long>(res.moves.size());
    }
  }
  long d22_steps = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    RandomParams p;
    p.seed = 30000 + seed;
    p.n = 3 + static_cast<int>(seed % 14);
    p.k = 2;
    const Digraph d = gen_random_family(RandomFamily::Dkk, p);
    D22Trace trace;
    dicut_d22(d, &trace);
    const std::string err = check_d22_trace(d, trace);
    REQUIRE(err.empty(), err);
    d22_steps += static_cast<long>(trace.steps.size());
  }
  REQUIRE(pairs > 0 && moves > 0 && d22_steps > 0, "some step family was never exercised");
  return {true, str(pairs) + " reducing pairs in " + str(d11_steps) + " d11 steps, " + str(moves) +
                    " peel moves, " + str(d22_steps) + " cycle peels"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"(2m - t)/5 cut on D(1,1)", d11_bound},
      {"7m/20 cut on connected D(1,1)", connected_d11_bound},
      {"gen_example1(k) maximum cut 3k+1", example1_tightness},
      {"m/3 extremes are triangle unions", third_characterization},
      {"2m/5 cut on triangle-free D(1,1)", triangle_free_bound},
      {"D(p1+p2) splits into D(p1) and D(p2)", class_split},
      {"peel to D(k-1,k-1) removes at most 2m/(2k+1)", peel_bound},
      {"gen_example2 has no cut leaving D(1,1)", example2_no_cut},
      {"balanced class bipartition bound", balanced_bipartition_bound},
      {"(k+1)m/(4k+2) cut on acyclic D(k,k)", acyclic_bound},
      {"3m/10 cut on D(2,2)", d22_bound},
      {"D(1,1) splits into three cuts", three_cut_decomposition},
      {"step-level reduction, move and trace checks", step_level_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %2zu: %s -- %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
