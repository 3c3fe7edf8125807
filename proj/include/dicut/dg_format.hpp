#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "dicut/digraph.hpp"

namespace dicut {

// Text format: optional '#' comment lines, then "n m", then exactly m lines
// "u v". Malformed input raises InputError with the offending line number.
Digraph read_dg(std::istream& in);
Digraph parse_dg(const std::string& text);
Digraph load_dg(const std::string& path);

// Writes each comment line prefixed with "# ".
void write_dg(std::ostream& out, const Digraph& d, const std::vector<std::string>& comments = {});
std::string format_dg(const Digraph& d, const std::vector<std::string>& comments = {});
void save_dg(const std::string& path, const Digraph& d,
             const std::vector<std::string>& comments = {});

}  // namespace dicut
