#pragma once

#include <ostream>
#include <stdexcept>
#include <vector>

#include "powergraph/graph.hpp"
#include "powergraph/io.hpp"
#include "powergraph/rational.hpp"

namespace powergraph {

struct PowerResult {
  Graph power_graph;
  int r;
  long long base_edges;
  long long power_edges;
};

/// G^r: edge xy whenever d(x,y) <= r. Loopless input yields a loopless
/// power; loops-allowed input yields a loop at every vertex (d(v,v)=0).
/// One truncated BFS per source vertex.
inline PowerResult graph_power(const Graph& g, int r) {
  if (r < 1) throw std::invalid_argument("graph_power: r must be >= 1");
  const int n = g.order();
  std::vector<VertexSet> adj(n, VertexSet(n));
  for (int v = 0; v < n; ++v) {
    adj[v] = r_neighborhood(g, {v}, r);
    if (!g.loops_allowed()) adj[v].erase(v);
  }
  Graph p(std::move(adj), g.loops_allowed());
  long long pe = p.edge_count();
  return PowerResult{std::move(p), r, g.edge_count(), pe};
}

/// e(G^r) / e(G) as an exact rational.
inline Rational power_ratio(const Graph& g, int r) {
  long long base = g.edge_count();
  if (base < 1) throw std::invalid_argument("power_ratio: edgeless graph");
  return Rational(graph_power(g, r).power_edges, base);
}

/// Copy of a loopless graph with a loop added at every vertex.
/// delta goes up by one and e(G^r) by |G|, for every r.
inline Graph add_loops(const Graph& g) {
  if (g.loop_count() > 0)
    throw std::invalid_argument("add_loops: input already has loops");
  std::vector<VertexSet> adj;
  adj.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) {
    VertexSet s = g.neighbors(v);
    s.insert(v);
    adj.push_back(std::move(s));
  }
  return Graph(std::move(adj), /*loops_allowed=*/true);
}

/// Edge-list output with a stats comment header.
inline void write_power_result(std::ostream& out, const PowerResult& pr) {
  out << "# r=" << pr.r << " e_base=" << pr.base_edges
      << " e_power=" << pr.power_edges << "\n";
  write_edge_list(out, pr.power_graph);
}

}  // namespace powergraph
