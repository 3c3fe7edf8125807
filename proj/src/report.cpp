#include "dicut/report.hpp"

#include "dicut/color_cut.hpp"
#include "dicut/d11_cut.hpp"
#include "dicut/errors.hpp"

namespace dicut {

std::optional<CutMethod> parse_cut_method(std::string_view name) {
  if (name == "d11") return CutMethod::D11;
  if (name == "d11c") return CutMethod::D11Connected;
  if (name == "acyclic") return CutMethod::Acyclic;
  if (name == "d22") return CutMethod::D22;
  if (name == "oracle") return CutMethod::Oracle;
  return std::nullopt;
}

std::string_view method_name(CutMethod method) {
  switch (method) {
    case CutMethod::D11: return "d11";
    case CutMethod::D11Connected: return "d11c";
    case CutMethod::Acyclic: return "acyclic";
    case CutMethod::D22: return "d22";
    case CutMethod::Oracle: return "oracle";
  }
  return "unknown";
}

Rational guaranteed_bound(const Digraph& d, CutMethod method, const OracleLimits& limits) {
  const std::int64_t m = d.m();
  switch (method) {
    case CutMethod::D11: {
      try {
        return Rational(2 * m - max_triangle_packing(d, limits), 5);
      } catch (const ResourceError&) {
        return Rational(m, 3);
      }
    }
    case CutMethod::D11Connected: return Rational(7 * m, 20);
    case CutMethod::Acyclic: {
      const std::int64_t k = min_symmetric_class(d);
      return Rational((k + 1) * m, 4 * k + 2);
    }
    case CutMethod::D22: return Rational(3 * m, 10);
    case CutMethod::Oracle: return Rational(m, 4);
  }
  return Rational(0);
}

CutCertificate run_cut_method(const Digraph& d, CutMethod method, const OracleLimits& limits) {
  switch (method) {
    case CutMethod::D11: return dicut_d11(d);
    case CutMethod::D11Connected: return dicut_d11_connected(d);
    case CutMethod::Acyclic: return dicut_acyclic(d, min_symmetric_class(d));
    case CutMethod::D22: return dicut_d22(d);
    case CutMethod::Oracle: return max_dicut_exact(d, limits);
  }
  throw InputError("unknown cut method");
}

VerificationReport verify_method(const std::string& instance, const Digraph& d, CutMethod method,
                                 bool with_oracle, const OracleLimits& limits) {
  VerificationReport r;
  r.instance = instance;
  r.method = std::string(method_name(method));
  r.n = d.n();
  r.m = d.m();
  const CutCertificate cut = run_cut_method(d, method, limits);
  r.size = cut.size;
  r.certificate_ok = verify_certificate(d, cut);
  r.bound = guaranteed_bound(d, method, limits);
  if (with_oracle && d.n() <= limits.max_cut_vertices) r.oracle = max_dicut_exact(d, limits).size;
  r.pass = r.certificate_ok && Rational(r.size) >= r.bound && (!r.oracle || r.size <= *r.oracle);
  return r;
}

std::string report_header() { return "instance\tmethod\tn\tm\tsize\tbound\toracle\tpass"; }

std::string format_report(const VerificationReport& r) {
  return r.instance + "\t" + r.method + "\t" + std::to_string(r.n) + "\t" + std::to_string(r.m) + "\t" +
         std::to_string(r.size) + "\t" + r.bound.str() + "\t" +
         (r.oracle ? std::to_string(*r.oracle) : std::string("-")) + "\t" + (r.pass ? "pass" : "fail");
}

}  // namespace dicut
