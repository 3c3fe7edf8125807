#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dicut/color_cut.hpp"
#include "dicut/d11_cut.hpp"
#include "dicut/decompose.hpp"
#include "dicut/dg_format.hpp"
#include "dicut/errors.hpp"
#include "dicut/explore.hpp"
#include "dicut/generators.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/peel.hpp"
#include "dicut/report.hpp"

using namespace dicut;

namespace {

std::string edges_str(const EdgeSet& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) os << (i ? " " : "") << edges[i].tail << "->" << edges[i].head;
  return os.str();
}

std::string vertices_str(const VertexSet& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? " " : "") << vs[i];
  return os.str();
}

void write_output(const std::string& path, const Digraph& d, const std::vector<std::string>& comments) {
  if (path == "-") {
    write_dg(std::cout, d, comments);
  } else {
    save_dg(path, d, comments);
  }
}

CutMethod method_from(const std::string& name) {
  const auto m = parse_cut_method(name);
  if (!m) throw InputError("unknown method '" + name + "' (d11, d11c, acyclic, d22, oracle)");
  return *m;
}

nlohmann::json report_json(const VerificationReport& r) {
  nlohmann::json j;
  j["instance"] = r.instance;
  j["method"] = r.method;
  j["n"] = r.n;
  j["m"] = r.m;
  j["size"] = r.size;
  j["bound"] = r.bound.str();
  j["oracle"] = r.oracle ? nlohmann::json(*r.oracle) : nlohmann::json(nullptr);
  j["c_max_ratio"] = r.ratio().str();
  j["certificate_ok"] = r.certificate_ok;
  j["pass"] = r.pass;
  return j;
}

void print_trace(const Digraph& d, CutMethod method) {
  if (method == CutMethod::D11 || method == CutMethod::D11Connected) {
    D11Trace trace;
    if (method == CutMethod::D11) {
      dicut_d11(d, &trace);
    } else {
      dicut_d11_connected(d, &trace);
    }
    for (const D11Step& s : trace.steps) {
      std::cout << "step\t" << s.tag << "\t" << s.added.size() << "\t" << s.pair_b.size() << "\t"
                << edges_str(s.added) << "\n";
    }
  } else if (method == CutMethod::D22) {
    D22Trace trace;
    dicut_d22(d, &trace);
    for (const CyclePeelStep& s : trace.steps) {
      std::cout << "step\tcycle\t" << s.e_c.size() << "\t" << s.f_c.size() << "\t" << edges_str(s.e_c) << "\n";
    }
    std::cout << "step\tbase\tdegeneracy " << trace.base_degeneracy << "\n";
  }
}

int run_report(const std::string& file, const std::string& method_str, bool with_oracle, bool json,
               bool verbose) {
  const Digraph d = load_dg(file);
  const CutMethod method = method_from(method_str);
  if (verbose) print_trace(d, method);
  const VerificationReport r = verify_method(file, d, method, with_oracle);
  std::cout << report_header() << "\n" << format_report(r) << "\n";
  if (json) std::cout << report_json(r).dump() << "\n";
  return r.pass ? 0 : 1;
}

Digraph generate(const std::string& family, int k, int n, int t, std::uint64_t seed) {
  if (family == "example1") return gen_example1(k);
  if (family == "example2") return gen_example2();
  if (family == "tournament") return gen_regular_tournament(k);
  if (family == "transitive") return gen_transitive_tournament(n);
  const auto f = parse_random_family(family);
  if (!f) {
    throw InputError("unknown family '" + family +
                     "' (example1, example2, tournament, transitive, d11, d11-trianglefree, dkk, "
                     "acyclic-dkk, disjoint-triangles)");
  }
  RandomParams p;
  p.n = n;
  p.k = k;
  p.t = t;
  p.seed = seed;
  return gen_random_family(*f, p);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directed cuts in digraphs with degree restrictions"};
  app.require_subcommand(1);

  std::string file;
  std::string out = "-";
  std::string method = "d11";
  bool json = false;
  bool verbose = false;

  auto* gen = app.add_subcommand("gen", "Generate a digraph");
  std::string family;
  int gk = 1;
  int gn = 10;
  int gt = 0;
  std::uint64_t gseed = 1;
  gen->add_option("family", family, "example1, example2, tournament, transitive or a random family")->required();
  gen->add_option("--k", gk, "Parameter k");
  gen->add_option("--n", gn, "Vertex count");
  gen->add_option("--t", gt, "Triangle count (disjoint-triangles)");
  gen->add_option("--seed", gseed, "Random seed");
  gen->add_option("-o,--output", out, "Output file ('-' for stdout)");

  auto* check = app.add_subcommand("check", "Test membership in D(k,l)");
  int ck = 1;
  int cl = 1;
  check->add_option("file", file)->required();
  check->add_option("--k", ck)->required();
  check->add_option("--l", cl)->required();

  auto* cut = app.add_subcommand("cut", "Run a cut algorithm and print its report");
  cut->add_option("file", file)->required();
  cut->add_option("--method", method, "d11, d11c, acyclic, d22 or oracle");
  cut->add_flag("--json", json, "Also print the report as JSON");
  cut->add_flag("-v,--verbose", verbose, "Print the reduction trace");

  auto* verify = app.add_subcommand("verify", "Run a cut algorithm and compare with the exact optimum");
  verify->add_option("file", file)->required();
  verify->add_option("--method", method, "d11, d11c, acyclic, d22 or oracle");
  verify->add_flag("--json", json, "Also print the report as JSON");
  verify->add_flag("-v,--verbose", verbose, "Print the reduction trace");

  auto* decompose = app.add_subcommand("decompose", "Split D(p1+p2,p1+p2) into D(p1,p1) and D(p2,p2)");
  std::vector<int> split;
  bool balanced = false;
  decompose->add_option("file", file)->required();
  decompose->add_option("--split", split, "P1 P2")->required()->expected(2);
  decompose->add_option("-o,--output", out, "Output prefix")->required();
  decompose->add_flag("--balanced", balanced, "Alternate unconstrained arcs between the parts");

  auto* peel = app.add_subcommand("peel", "Remove arcs to reach D(k-1,k-1)");
  int pk = 1;
  peel->add_option("file", file)->required();
  peel->add_option("--k", pk)->required();
  peel->add_option("-o,--output", out, "Output prefix")->required();
  peel->add_flag("-v,--verbose", verbose, "Print the move trace");

  auto* exp = app.add_subcommand("explore", "Search small digraphs for counterexamples to open questions");
  ExploreParams ep;
  exp->add_option("--problem", ep.problem, "1..8")->required();
  exp->add_option("--max-n", ep.max_n);
  exp->add_option("--seed", ep.seed);
  exp->add_option("--budget", ep.budget, "Random samples");
  exp->add_option("--k", ep.k, "Class for problem 8");
  exp->add_flag("--exhaustive", ep.exhaustive, "Enumerate all digraphs up to max-n (max-n <= 7)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) {
      const Digraph d = generate(family, gk, gn, gt, gseed);
      write_output(out, d, {"family " + family + " k " + std::to_string(gk) + " n " + std::to_string(gn) +
                                " t " + std::to_string(gt) + " seed " + std::to_string(gseed)});
      return 0;
    }
    if (*check) {
      const Digraph d = load_dg(file);
      const auto part = class_partition(d, ck, cl);
      if (!part) {
        std::cout << "not in D(" << ck << "," << cl << ")\n";
        return 1;
      }
      std::cout << "in D(" << ck << "," << cl << ")\nX: " << vertices_str(part->x) << "\nY: "
                << vertices_str(part->y) << "\n";
      return 0;
    }
    if (*cut) return run_report(file, method, false, json, verbose);
    if (*verify) return run_report(file, method, true, json, verbose);
    if (*decompose) {
      const Digraph d = load_dg(file);
      const SplitResult r = split_dkk(d, split[0], split[1], balanced ? ForwardArcs::Alternate : ForwardArcs::AllToFirst);
      write_output(out + ".1.dg", r.d1, {"part 1 of " + file + " in D(" + std::to_string(split[0]) + "," +
                                             std::to_string(split[0]) + ")"});
      write_output(out + ".2.dg", r.d2, {"part 2 of " + file + " in D(" + std::to_string(split[1]) + "," +
                                             std::to_string(split[1]) + ")"});
      std::cout << "split " << d.m() << " arcs into " << r.d1.m() << " + " << r.d2.m() << "\n";
      return 0;
    }
    if (*peel) {
      const Digraph d = load_dg(file);
      const PeelResult r = peel_to_lower_class(d, pk);
      if (verbose) {
        for (const Rewrite& rw : r.moves) {
          std::cout << "move\t" << move_name(rw.kind) << "\t-" << edges_str(rw.remove) << "\t+" << edges_str(rw.add)
                    << "\n";
        }
      }
      const std::string lower = "D(" + std::to_string(pk - 1) + "," + std::to_string(pk - 1) + ")";
      write_output(out + ".removed.dg", d.restricted_to(r.removed), {"arcs removed from " + file});
      write_output(out + ".kept.dg", r.kept, {"remainder of " + file + " in " + lower});
      std::cout << "removed " << r.removed.size() << " of " << d.m() << " arcs (initial " << r.initial_size
                << ", " << r.moves.size() << " moves); remainder in " << lower << "\n";
      return 0;
    }
    if (*exp) {
      const ExploreResult r = explore(ep);
      for (const std::string& line : r.lines) std::cout << line << "\n";
      if (r.violated) std::cout << "counterexample found\n";
      return r.violated ? 1 : 0;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const AlgorithmError& e) {
    std::cerr << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
