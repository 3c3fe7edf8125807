#include "dicut/dg_format.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "dicut/errors.hpp"

namespace dicut {

namespace {

// Exactly two non-negative decimal integers separated by a single space.
bool parse_pair(const std::string& line, long long& a, long long& b) {
  const auto space = line.find(' ');
  if (space == std::string::npos || space == 0 || space + 1 >= line.size()) return false;
  auto parse = [](const char* first, const char* last, long long& out) {
    if (first == last) return false;
    for (const char* p = first; p != last; ++p) {
      if (*p < '0' || *p > '9') return false;
    }
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
  };
  const char* data = line.data();
  return parse(data, data + space, a) && parse(data + space + 1, data + line.size(), b);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Digraph read_dg(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!have_header) {
      if (!line.empty() && line.front() == '#') continue;
      if (!parse_pair(line, n, m)) fail(line_no, "expected header \"n m\"");
      if (n > (1LL << 30) || m > (1LL << 30)) fail(line_no, "graph too large");
      have_header = true;
      edges.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (static_cast<long long>(edges.size()) == m) {
      if (line.empty()) continue;
      fail(line_no, "more edge lines than declared");
    }
    long long u = 0;
    long long v = 0;
    if (!parse_pair(line, u, v)) fail(line_no, "expected edge \"u v\"");
    if (u >= n || v >= n) fail(line_no, "vertex id out of range");
    if (u == v) fail(line_no, "loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (!have_header) throw InputError("missing header line");
  if (static_cast<long long>(edges.size()) != m) {
    throw InputError("declared " + std::to_string(m) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Digraph(static_cast<int>(n), std::move(edges));
}

Digraph parse_dg(const std::string& text) {
  std::istringstream in(text);
  return read_dg(in);
}

Digraph load_dg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read_dg(in);
}

void write_dg(std::ostream& out, const Digraph& d, const std::vector<std::string>& comments) {
  for (const auto& c : comments) out << "# " << c << '\n';
  out << d.n() << ' ' << d.m() << '\n';
  for (const Edge& e : d.edges()) out << e.tail << ' ' << e.head << '\n';
}

std::string format_dg(const Digraph& d, const std::vector<std::string>& comments) {
  std::ostringstream out;
  write_dg(out, d, comments);
  return out.str();
}

void save_dg(const std::string& path, const Digraph& d, const std::vector<std::string>& comments) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  write_dg(out, d, comments);
}

}  // namespace dicut
