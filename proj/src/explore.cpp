#include "dicut/explore.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "dicut/census.hpp"
#include "dicut/errors.hpp"
#include "dicut/generators.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/oracle.hpp"
#include "dicut/rational.hpp"

namespace dicut {

namespace {

using Visitor = std::function<void(const Digraph&, const std::string&)>;

// Calls `visit` on every sample: all digon-free members of D(k,k) up to
// max_n when exhaustive, otherwise `budget` random members of `family`.
void for_each_sample(const ExploreParams& p, RandomFamily family, int k, const Visitor& visit) {
  if (p.exhaustive) {
    if (p.max_n > 7) throw ResourceError("explore: exhaustive search supports max-n <= 7");
    for (int n = 1; n <= p.max_n; ++n) {
      for (const Digraph& d : enumerate_class(n, k, k)) {
        if (family == RandomFamily::D11TriangleFree && !directed_triangles(d).empty()) continue;
        visit(d, "n" + std::to_string(n) + ":" + std::to_string(canonical_code(d)));
      }
    }
    return;
  }
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < p.budget; ++i) {
    RandomParams rp;
    rp.n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, p.max_n - 2)));
    rp.k = k;
    rp.seed = rng();
    visit(gen_random_family(family, rp), "seed" + std::to_string(rp.seed) + ":n" + std::to_string(rp.n));
  }
}

// The largest weak component, relabelled.
Digraph largest_component(const Digraph& d) {
  const auto comps = edge_components(d);
  if (comps.empty()) return Digraph(0);
  const auto it = std::max_element(comps.begin(), comps.end(), [&](const VertexSet& a, const VertexSet& b) {
    return induced_edges(d, a).size() < induced_edges(d, b).size();
  });
  return induced_subgraph(d, *it).graph;
}

void problem1(const ExploreParams& p, ExploreResult& out) {
  std::map<int, std::pair<Rational, std::string>> best;
  auto consider = [&](const Digraph& g, const std::string& name) {
    if (g.m() == 0 || (g.m() == 3 && directed_triangles(g).size() == 1)) return;
    const int opt = max_dicut_exact(g).size;
    const Rational ratio(opt, g.m());
    if (20 * opt < 7 * g.m()) {
      out.violated = true;
      out.lines.push_back("below 7/20: " + name + " m=" + std::to_string(g.m()) + " cut=" + std::to_string(opt));
    }
    auto it = best.find(g.m());
    if (it == best.end() || ratio < it->second.first) best[g.m()] = {ratio, name};
  };
  for_each_sample(p, RandomFamily::D11, 1, [&](const Digraph& d, const std::string& name) {
    consider(largest_component(d), name);
  });
  for (int k = 1; 6 * k + 3 <= std::min(p.max_n, 26); ++k) consider(gen_example1(k), "example1-k" + std::to_string(k));
  out.lines.push_back("m\tmin_cmax\tbelow_3/8\tinstance");
  for (const auto& [m, entry] : best) {
    out.lines.push_back(std::to_string(m) + "\t" + entry.first.str() + "\t" +
                        (entry.first < Rational(3, 8) ? "yes" : "no") + "\t" + entry.second);
  }
}

void problem2(const ExploreParams& p, ExploreResult& out) {
  int checked = 0;
  Rational worst(1000);
  for_each_sample(p, RandomFamily::D11TriangleFree, 1, [&](const Digraph& d, const std::string& name) {
    const Digraph g = largest_component(d);
    if (g.m() == 0 || !directed_triangles(g).empty()) return;
    int s = 0;
    for (Vertex v = 0; v < g.n(); ++v) s += g.in_degree(v) == 0 || g.out_degree(v) == 0 ? 1 : 0;
    const int opt = max_dicut_exact(g).size;
    ++checked;
    const Rational slack(5 * opt - 2 * g.m() - s, 1);
    if (slack < worst) worst = slack;
    if (5 * opt < 2 * g.m() + s) {
      out.violated = true;
      out.lines.push_back("counterexample: " + name + " m=" + std::to_string(g.m()) + " s=" +
                          std::to_string(s) + " cut=" + std::to_string(opt));
    }
  });
  out.lines.push_back("checked " + std::to_string(checked) + " connected triangle-free instances; min 5*cut-(2m+s) = " +
                      (checked ? std::to_string(worst.num) : std::string("-")));
}

void problem3(const ExploreParams& p, ExploreResult& out) {
  constexpr int kMaxListed = 20;
  int checked = 0;
  int tight = 0;
  int exact = 0;
  for_each_sample(p, RandomFamily::D11TriangleFree, 1, [&](const Digraph& d, const std::string& name) {
    if (d.m() == 0 || !directed_triangles(d).empty()) return;
    const int opt = max_dicut_exact(d).size;
    ++checked;
    if (5 * opt < 2 * d.m()) {
      out.violated = true;
      out.lines.push_back("below 2m/5: " + name);
    }
    if (opt != Rational(2 * d.m(), 5).ceil()) return;
    ++tight;
    if (5 * opt == 2 * d.m()) ++exact;
    if (tight <= kMaxListed) {
      out.lines.push_back("tight: " + name + " n=" + std::to_string(d.n()) + " m=" + std::to_string(d.m()) +
                          " cut=" + std::to_string(opt) + (5 * opt == 2 * d.m() ? " (= 2m/5)" : ""));
    }
  });
  out.lines.push_back("checked " + std::to_string(checked) + "; cut = ceil(2m/5): " + std::to_string(tight) +
                      "; of which cut = 2m/5: " + std::to_string(exact));
}

void problem5(const ExploreParams& p, ExploreResult& out) {
  Rational lowest(1);
  std::string where = "-";
  int checked = 0;
  for_each_sample(p, RandomFamily::Dkk, 2, [&](const Digraph& d, const std::string& name) {
    if (d.m() == 0) return;
    const auto r = min_removal_exact(d, 2);
    ++checked;
    const Rational kept(d.m() - static_cast<std::int64_t>(r.size()), d.m());
    if (kept < Rational(3, 5)) {
      out.violated = true;
      out.lines.push_back("below 3/5: " + name);
    }
    if (kept < lowest) {
      lowest = kept;
      where = name;
    }
  });
  const Digraph t5 = gen_regular_tournament(2);
  const Rational t5_kept(t5.m() - static_cast<std::int64_t>(min_removal_exact(t5, 2).size()), t5.m());
  out.lines.push_back("checked " + std::to_string(checked) + "; smallest kept fraction " + lowest.str() + " at " + where);
  out.lines.push_back("regular tournament on 5 vertices keeps " + t5_kept.str());
}

void problem6(const ExploreParams& p, ExploreResult& out) {
  ExploreParams q = p;
  q.max_n = std::min(p.max_n, 10);
  int checked = 0;
  int need_four = 0;
  for_each_sample(q, RandomFamily::Dkk, 2, [&](const Digraph& d, const std::string& name) {
    ++checked;
    if (decompose_into_cuts(d, 4)) {
      if (!decompose_into_cuts(d, 3)) ++need_four;
      return;
    }
    out.violated = true;
    out.lines.push_back("needs five or more cuts: " + name);
  });
  out.lines.push_back("checked " + std::to_string(checked) + "; needing exactly four cuts: " + std::to_string(need_four));
}

void ratio_check(const ExploreParams& p, int k, Rational threshold, ExploreResult& out) {
  Rational lowest(1);
  std::string where = "-";
  int checked = 0;
  for_each_sample(p, RandomFamily::Dkk, k, [&](const Digraph& d, const std::string& name) {
    if (d.m() == 0) return;
    const int opt = max_dicut_exact(d).size;
    ++checked;
    const Rational ratio(opt, d.m());
    if (ratio < threshold) {
      out.violated = true;
      out.lines.push_back("below " + threshold.str() + ": " + name + " m=" + std::to_string(d.m()) +
                          " cut=" + std::to_string(opt));
    }
    if (ratio < lowest) {
      lowest = ratio;
      where = name;
    }
  });
  out.lines.push_back("checked " + std::to_string(checked) + "; smallest c_max " + lowest.str() + " at " + where);
}

}  // namespace

ExploreResult explore(const ExploreParams& params) {
  ExploreResult out;
  if (params.max_n < 3) throw InputError("explore: max-n must be at least 3");
  if (params.budget < 0) throw InputError("explore: budget must be non-negative");
  switch (params.problem) {
    case 1: problem1(params, out); break;
    case 2: problem2(params, out); break;
    case 3: problem3(params, out); break;
    case 4:
      out.in_scope = false;
      out.lines.push_back("problem 4 asks for a complexity classification; nothing to search");
      break;
    case 5: problem5(params, out); break;
    case 6: problem6(params, out); break;
    case 7: ratio_check(params, 3, Rational(2, 7), out); break;
    case 8: {
      if (params.k < 1) throw InputError("explore: k must be at least 1");
      ratio_check(params, params.k, Rational(2 * params.k + 2, 8 * params.k + 4), out);
      break;
    }
    default: throw InputError("explore: problem must be in 1..8");
  }
  return out;
}

}  // namespace dicut
