#pragma once

#include <iosfwd>
#include <string>

#include "rootcast/tree.hpp"

namespace rootcast {

// Plain-text tree format, one item per line:
//   # anything        comment, ignored
//   a b               edge between vertices a and b (non-negative integers)
//   v a               lone vertex; only legal as the single item of a file
// Blank lines are ignored.  Vertex ids may be arbitrary non-negative 64-bit
// integers; they are remapped densely but reprinted verbatim on output.
Tree read_edge_list(std::istream& in);
Tree read_edge_list_file(const std::string& path);  // "-" reads stdin

// Inverse of read_edge_list up to comments: "v <label>" for a single vertex,
// otherwise one "a b" line per edge in (a,b)-ascending order.
std::string write_edge_list(const Tree& t);

}  // namespace rootcast
