#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "powergraph/graph.hpp"

namespace powergraph {

/// Edge-list text format:
///   n=<int> loops=<0|1>
///   u v            (one pair per line)
/// '#' starts a comment; blank lines are skipped.
inline Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  bool loops = false;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (n < 0) {
      // header line
      int loops_flag = -1;
      std::istringstream hs(line);
      std::string field;
      while (hs >> field) {
        if (field.rfind("n=", 0) == 0)
          n = std::stoi(field.substr(2));
        else if (field.rfind("loops=", 0) == 0)
          loops_flag = std::stoi(field.substr(6));
        else
          throw std::runtime_error("line " + std::to_string(lineno) +
                                   ": unexpected header field '" + field + "'");
      }
      if (n < 0 || loops_flag < 0)
        throw std::runtime_error("line " + std::to_string(lineno) +
                                 ": expected header 'n=<int> loops=<0|1>'");
      loops = loops_flag != 0;
      continue;
    }
    int u, v;
    std::istringstream es(line);
    if (!(es >> u >> v))
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": expected 'u v' edge pair");
    std::string extra;
    if (es >> extra)
      throw std::runtime_error("line " + std::to_string(lineno) +
                               ": trailing token '" + extra + "'");
    edges.emplace_back(u, v);
  }
  if (n < 0) throw std::runtime_error("missing header line 'n=<int> loops=<0|1>'");
  return Graph(n, edges, loops);
}

/// Writes each edge once (u <= v), ascending. Round-trips bit-exactly.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n=" << g.order() << " loops=" << (g.loops_allowed() ? 1 : 0) << "\n";
  for (int u = 0; u < g.order(); ++u)
    g.neighbors(u).for_each([&](int v) {
      if (u <= v) out << u << " " << v << "\n";
    });
}

}  // namespace powergraph
