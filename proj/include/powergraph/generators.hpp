#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "powergraph/bounds.hpp"
#include "powergraph/graph.hpp"
#include "powergraph/power.hpp"
#include "powergraph/rational.hpp"

namespace powergraph {

/// Layer structure N_0..N_k shared by both extremal families. Vertices are
/// numbered contiguously, increasing with layer index.
struct LayeredBlueprint {
  std::vector<int> layer_sizes;
  std::vector<int> layer_of;
  std::vector<int> removed_cycle;  // empty when the family removes no cycle
  std::vector<std::pair<int, std::vector<std::pair<int, int>>>> removed_matchings;

  int layer_start(int i) const {
    int s = 0;
    for (int j = 0; j < i; ++j) s += layer_sizes[j];
    return s;
  }
  std::vector<int> layer_members(int i) const {
    std::vector<int> out(layer_sizes[i]);
    std::iota(out.begin(), out.end(), layer_start(i));
    return out;
  }
};

namespace detail {

/// Complete within each layer and between consecutive layers.
inline std::vector<std::pair<int, int>> layered_clique_edges(
    const std::vector<int>& sizes) {
  std::vector<int> start(sizes.size() + 1, 0);
  for (std::size_t i = 0; i < sizes.size(); ++i) start[i + 1] = start[i] + sizes[i];
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    for (int u = start[i]; u < start[i + 1]; ++u) {
      for (int v = u + 1; v < start[i + 1]; ++v) edges.emplace_back(u, v);
      if (i + 1 < sizes.size())
        for (int v = start[i + 1]; v < start[i + 2]; ++v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

inline void remove_edge(std::vector<std::pair<int, int>>& edges, int u, int v) {
  auto it = std::find_if(edges.begin(), edges.end(), [&](auto e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
  if (it == edges.end())
    throw std::logic_error("construction removed a non-existent edge");
  edges.erase(it);
}

}  // namespace detail

/// G_m family: layers N_0..N_r with |N_i| = m-1 when i = 1 mod 3 and 2
/// otherwise, layered clique join, minus one cycle through N_1..N_{r-1}.
/// m-regular, diameter r, G^r complete.
inline std::pair<Graph, LayeredBlueprint> build_Gm(int r, int m) {
  if (r % 3 == 0) throw std::invalid_argument("Gm requires r != 0 mod 3");
  if (r < 4) throw std::invalid_argument("Gm requires r >= 4");
  if (m < 3) throw std::invalid_argument("Gm requires m >= 3");

  LayeredBlueprint bp;
  bp.layer_sizes.resize(r + 1);
  for (int i = 0; i <= r; ++i) bp.layer_sizes[i] = (i % 3 == 1) ? m - 1 : 2;
  int n = 0;
  for (int i = 0; i <= r; ++i) {
    for (int j = 0; j < bp.layer_sizes[i]; ++j) bp.layer_of.push_back(i);
    n += bp.layer_sizes[i];
  }
  auto edges = detail::layered_clique_edges(bp.layer_sizes);

  // Snake cycle with a reserved return rail: all of N_1, then each of
  // N_2..N_{r-2} minus its last vertex, then all of N_{r-1}, then the
  // reserved vertices back down.
  std::vector<int> cycle;
  for (int v : bp.layer_members(1)) cycle.push_back(v);
  std::vector<int> reserved;
  for (int i = 2; i <= r - 2; ++i) {
    auto mem = bp.layer_members(i);
    reserved.push_back(mem.back());
    mem.pop_back();
    for (int v : mem) cycle.push_back(v);
  }
  for (int v : bp.layer_members(r - 1)) cycle.push_back(v);
  for (auto it = reserved.rbegin(); it != reserved.rend(); ++it) cycle.push_back(*it);

  for (std::size_t i = 0; i < cycle.size(); ++i)
    detail::remove_edge(edges, cycle[i], cycle[(i + 1) % cycle.size()]);
  bp.removed_cycle = cycle;

  return {Graph(n, edges, /*loops_allowed=*/false), std::move(bp)};
}

/// H_m family: layers N_0..N_{r+1} with |N_0| = |N_{r+1}| = 2m+1, singleton
/// layers at i = 2 mod 3, 2m elsewhere; layered clique join minus a perfect
/// matching in each of N_1 and N_r. 4m-regular, diameter r+1; the only pairs
/// beyond distance r are N_0 x N_{r+1}.
inline std::pair<Graph, LayeredBlueprint> build_Hm(int r, int m) {
  if (r % 3 != 0 || r < 3) throw std::invalid_argument("Hm requires r = 0 mod 3, r >= 3");
  if (m < 1) throw std::invalid_argument("Hm requires m >= 1");

  LayeredBlueprint bp;
  bp.layer_sizes.resize(r + 2);
  for (int i = 0; i <= r + 1; ++i) {
    if (i == 0 || i == r + 1)
      bp.layer_sizes[i] = 2 * m + 1;
    else
      bp.layer_sizes[i] = (i % 3 == 2) ? 1 : 2 * m;
  }
  int n = 0;
  for (int i = 0; i <= r + 1; ++i) {
    for (int j = 0; j < bp.layer_sizes[i]; ++j) bp.layer_of.push_back(i);
    n += bp.layer_sizes[i];
  }
  auto edges = detail::layered_clique_edges(bp.layer_sizes);

  for (int layer : {1, r}) {
    auto mem = bp.layer_members(layer);
    std::vector<std::pair<int, int>> matching;
    for (std::size_t j = 0; j + 1 < mem.size(); j += 2) {
      detail::remove_edge(edges, mem[j], mem[j + 1]);
      matching.emplace_back(mem[j], mem[j + 1]);
    }
    bp.removed_matchings.emplace_back(layer, std::move(matching));
  }

  return {Graph(n, edges, /*loops_allowed=*/false), std::move(bp)};
}

/// Closed-form order for G_m (the r = 2 mod 3 case is derived by summing
/// layer sizes; the audit re-verifies it by counting).
inline long long gm_order(int r, int m) {
  if (r % 3 == 1) return (static_cast<long long>(r) * m + 2 * m + 3 * r) / 3;
  return static_cast<long long>(r + 1) * (m + 3) / 3;
}

inline long long hm_order(int r, int m) {
  return (4LL * r * m + r + 12LL * m + 6) / 3;
}

inline long long hm_power_edges(int r, int m) {
  long long n = hm_order(r, m);
  long long t = 2LL * m + 1;
  return n * (n - 1) / 2 - t * t;
}

/// Executable form of each family's claimed facts.
struct ConstructionAudit {
  std::string family;
  int r = 0, m = 0;
  long long claimed_order = 0, actual_order = 0;
  std::optional<int> regular_degree;  // nullopt = irregular
  int claimed_degree = 0;
  std::optional<int> diam;
  int claimed_diameter = 0;
  long long claimed_power_edges = 0, power_edges = 0;
  Rational ratio;
  bool connected = false;
  bool pass = false;
};

inline ConstructionAudit audit_Gm(int r, int m) {
  auto [g, bp] = build_Gm(r, m);
  ConstructionAudit a;
  a.family = "Gm";
  a.r = r;
  a.m = m;
  a.claimed_order = gm_order(r, m);
  a.actual_order = g.order();
  a.claimed_degree = m;
  if (g.is_regular()) a.regular_degree = g.degree(0);
  a.connected = is_connected(g);
  a.diam = diameter(g);
  a.claimed_diameter = r;
  a.claimed_power_edges = static_cast<long long>(g.order()) * (g.order() - 1) / 2;
  auto pr = graph_power(g, r);
  a.power_edges = pr.power_edges;
  a.ratio = Rational(pr.power_edges, pr.base_edges);
  a.pass = a.actual_order == a.claimed_order && a.regular_degree == m &&
           a.connected && a.diam == r && a.power_edges == a.claimed_power_edges;
  return a;
}

inline ConstructionAudit audit_Hm(int r, int m) {
  auto [g, bp] = build_Hm(r, m);
  ConstructionAudit a;
  a.family = "Hm";
  a.r = r;
  a.m = m;
  a.claimed_order = hm_order(r, m);
  a.actual_order = g.order();
  a.claimed_degree = 4 * m;
  if (g.is_regular()) a.regular_degree = g.degree(0);
  a.connected = is_connected(g);
  a.diam = diameter(g);
  a.claimed_diameter = r + 1;
  a.claimed_power_edges = hm_power_edges(r, m);
  auto pr = graph_power(g, r);
  a.power_edges = pr.power_edges;
  a.ratio = Rational(pr.power_edges, pr.base_edges);
  a.pass = a.actual_order == a.claimed_order && a.regular_degree == 4 * m &&
           a.connected && a.diam == r + 1 && a.power_edges == a.claimed_power_edges;
  return a;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// Cayley graph of A in Z_p: edge xy whenever x-y or y-x lies in A.
inline Graph cayley_graph(long long p, const std::vector<long long>& A) {
  if (!is_prime(p)) throw std::invalid_argument("cayley_graph: p must be prime");
  if (A.empty()) throw std::invalid_argument("cayley_graph: empty generating set");
  std::vector<std::pair<int, int>> edges;
  for (long long a : A) {
    long long s = ((a % p) + p) % p;
    if (s == 0) throw std::invalid_argument("cayley_graph: 0 in generating set");
    for (long long x = 0; x < p; ++x)
      edges.emplace_back(static_cast<int>(x), static_cast<int>((x + s) % p));
  }
  return Graph(static_cast<int>(p), edges, /*loops_allowed=*/false);
}

/// Configuration model with rejection of loops, multi-edges, and
/// disconnected outcomes. Deterministic given seed.
inline Graph random_regular_connected(int n, int d, std::uint64_t seed,
                                      int max_attempts = 1000) {
  if (n <= 0 || d < 0 || d >= n)
    throw std::invalid_argument("random_regular_connected: need 0 <= d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("random_regular_connected: n*d must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> edges;
    bool defective = false;
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v || adj[u].contains(v)) {
        defective = true;
        break;
      }
      adj[u].insert(v);
      adj[v].insert(u);
      edges.emplace_back(u, v);
    }
    if (defective) continue;
    Graph g(n, edges, /*loops_allowed=*/false);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_regular_connected: no valid graph after " +
                           std::to_string(max_attempts) + " attempts");
}

struct ConvergenceRow {
  int m = 0;
  long long order = 0;
  Rational ratio, bound, gap;
};

/// One audited row per m; gap = ratio - bound.
inline std::vector<ConvergenceRow> convergence_table(int r,
                                                     const std::vector<int>& m_values) {
  std::vector<ConvergenceRow> rows;
  Rational bound = regular_ratio_bound(r);
  for (int m : m_values) {
    ConstructionAudit a = (r % 3 == 0) ? audit_Hm(r, m) : audit_Gm(r, m);
    if (!a.pass)
      throw std::runtime_error("convergence_table: audit failed at m=" +
                               std::to_string(m));
    rows.push_back(ConvergenceRow{m, a.actual_order, a.ratio, bound, a.ratio - bound});
  }
  return rows;
}

/// Deterministic blueprint text format.
inline void write_blueprint(std::ostream& out, const std::string& family, int r,
                            int m, const LayeredBlueprint& bp) {
  out << "family=" << family << " r=" << r << " m=" << m << "\n";
  for (std::size_t i = 0; i < bp.layer_sizes.size(); ++i) {
    int start = bp.layer_start(static_cast<int>(i));
    out << "layer " << i << " " << start << ".." << start + bp.layer_sizes[i] - 1
        << "\n";
  }
  if (!bp.removed_cycle.empty()) {
    out << "cycle";
    for (int v : bp.removed_cycle) out << " " << v;
    out << "\n";
  }
  for (const auto& [layer, pairs] : bp.removed_matchings) {
    out << "matching " << layer;
    for (auto [u, v] : pairs) out << " " << u << "-" << v;
    out << "\n";
  }
}

}  // namespace powergraph
