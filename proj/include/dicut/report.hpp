#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "dicut/digraph.hpp"
#include "dicut/graph_core.hpp"
#include "dicut/oracle.hpp"
#include "dicut/rational.hpp"

namespace dicut {

enum class CutMethod { D11, D11Connected, Acyclic, D22, Oracle };

std::optional<CutMethod> parse_cut_method(std::string_view name);
std::string_view method_name(CutMethod method);

// Lower bound the method guarantees on this digraph:
//   d11      (2m - t)/5, t the exact triangle packing (m/3 if t is out of reach)
//   d11c     7m/20
//   acyclic  (k+1)m/(4k+2), k the smallest with D in D(k,k)
//   d22      3m/10
//   oracle   m/4
Rational guaranteed_bound(const Digraph& d, CutMethod method, const OracleLimits& limits = {});

// Runs the method; preconditions are the method's own (PreconditionError).
CutCertificate run_cut_method(const Digraph& d, CutMethod method, const OracleLimits& limits = {});

struct VerificationReport {
  std::string instance;
  std::string method;
  int n = 0;
  int m = 0;
  int size = 0;
  Rational bound;
  std::optional<int> oracle;
  bool certificate_ok = false;
  bool pass = false;

  Rational ratio() const { return m == 0 ? Rational(0) : Rational(size, m); }
};

// Runs the method and, if `with_oracle` and the instance is small enough,
// the exact maximum. pass iff the certificate re-checks, size >= bound and
// size <= oracle when present.
VerificationReport verify_method(const std::string& instance, const Digraph& d, CutMethod method,
                                 bool with_oracle, const OracleLimits& limits = {});

std::string report_header();
// Tab-separated: instance method n m size bound oracle pass.
std::string format_report(const VerificationReport& r);

}  // namespace dicut
