#include "rootcast/treeio.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "rootcast/errors.hpp"

namespace rootcast {

Tree read_edge_list(std::istream& in) {
  std::vector<std::pair<long long, long long>> edges;
  bool lone_vertex = false;
  long long lone_id = 0;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;

    auto context = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (first == "v") {
      long long id;
      if (!(ls >> id) || id < 0) fail(errc::bad_input, "malformed lone-vertex line" + context());
      std::string extra;
      if (ls >> extra) fail(errc::bad_input, "trailing tokens after lone vertex" + context());
      if (lone_vertex) fail(errc::bad_input, "second lone-vertex line" + context());
      lone_vertex = true;
      lone_id = id;
      continue;
    }
    long long a, b;
    std::istringstream es(line);
    if (!(es >> a >> b) || a < 0 || b < 0) fail(errc::bad_input, "malformed edge line" + context());
    std::string extra;
    if (es >> extra) fail(errc::bad_input, "trailing tokens after edge" + context());
    edges.push_back({a, b});
  }

  if (lone_vertex && !edges.empty())
    fail(errc::bad_input, "lone-vertex line mixed with edges");
  if (lone_vertex) return Tree::single(lone_id);
  if (edges.empty()) fail(errc::bad_input, "no edges and no lone-vertex line");
  return Tree::from_edges(edges);
}

Tree read_edge_list_file(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream in(path);
  if (!in) fail(errc::bad_input, "cannot open '" + path + "'");
  return read_edge_list(in);
}

std::string write_edge_list(const Tree& t) {
  std::ostringstream out;
  if (t.n() == 1) {
    out << "v " << t.label(0) << "\n";
    return out.str();
  }
  for (auto [u, v] : t.edges()) out << t.label(u) << " " << t.label(v) << "\n";
  return out.str();
}

}  // namespace rootcast
