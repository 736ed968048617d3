#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace powergraph {

/// Fixed-width bit set over vertex ids 0..n-1. Word-parallel union is the
/// hot operation in power computation.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int n) : size_(n), words_((n + 63) / 64, 0) {}

  int universe() const { return size_; }

  void insert(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void erase(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  int count() const {
    int c = 0;
    for (std::uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool operator==(const VertexSet& o) const = default;

  bool intersects(const VertexSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  /// Members in increasing order.
  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<int>(wi * 64) + b);
        w &= w - 1;
      }
    }
  }

 private:
  int size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable undirected graph on vertices 0..n-1. A loop is recorded as
/// self-membership in the neighbor set, so degree counts a loop once.
class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edges, bool loops_allowed)
      : n_(n), loops_allowed_(loops_allowed), adj_(n, VertexSet(n)) {
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("edge endpoint out of range: " + std::to_string(u) +
                                " " + std::to_string(v));
      if (u == v && !loops_allowed)
        throw std::invalid_argument("loop at vertex " + std::to_string(u) +
                                    " but loops are forbidden");
      adj_[u].insert(v);
      adj_[v].insert(u);
    }
  }

  /// Internal: adopt prebuilt symmetric adjacency.
  Graph(std::vector<VertexSet> adj, bool loops_allowed)
      : n_(static_cast<int>(adj.size())), loops_allowed_(loops_allowed),
        adj_(std::move(adj)) {}

  int order() const { return n_; }
  bool loops_allowed() const { return loops_allowed_; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].contains(v); }
  bool has_loop(int v) const { return adj_[v].contains(v); }
  int degree(int v) const { return adj_[v].count(); }

  int loop_count() const {
    int c = 0;
    for (int v = 0; v < n_; ++v) c += has_loop(v);
    return c;
  }

  /// e(G): a loop counts as one edge.
  long long edge_count() const {
    long long s = 0;
    for (int v = 0; v < n_; ++v) s += degree(v);
    return (s + loop_count()) / 2;
  }

  int min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
  }

  bool is_regular() const {
    for (int v = 1; v < n_; ++v)
      if (degree(v) != degree(0)) return false;
    return true;
  }

 private:
  int n_;
  bool loops_allowed_;
  std::vector<VertexSet> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges,
                         bool loops_allowed) {
  return Graph(n, edges, loops_allowed);
}

/// Per-source shortest path distances; unreachable vertices carry no value.
struct DistanceVector {
  int source = 0;
  std::vector<std::optional<int>> dist;
};

inline DistanceVector bfs_distances(const Graph& g, int source) {
  if (source < 0 || source >= g.order())
    throw std::out_of_range("bfs source out of range");
  DistanceVector dv;
  dv.source = source;
  dv.dist.assign(g.order(), std::nullopt);
  dv.dist[source] = 0;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    int du = *dv.dist[u];
    g.neighbors(u).for_each([&](int v) {
      if (!dv.dist[v]) {
        dv.dist[v] = du + 1;
        queue.push_back(v);
      }
    });
  }
  return dv;
}

inline std::optional<int> eccentricity(const Graph& g, int v) {
  auto dv = bfs_distances(g, v);
  int e = 0;
  for (const auto& d : dv.dist) {
    if (!d) return std::nullopt;
    e = std::max(e, *d);
  }
  return e;
}

/// Maximum pairwise distance; nullopt means disconnected (infinite).
inline std::optional<int> diameter(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) {
    auto e = eccentricity(g, v);
    if (!e) return std::nullopt;
    d = std::max(d, *e);
  }
  return d;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  auto dv = bfs_distances(g, 0);
  for (const auto& d : dv.dist)
    if (!d) return false;
  return true;
}

/// N^r(X): vertices at distance at most r from the set X.
inline VertexSet r_neighborhood(const Graph& g, const std::vector<int>& sources,
                                int r) {
  if (sources.empty()) throw std::invalid_argument("r_neighborhood: empty source set");
  if (r < 0) throw std::invalid_argument("r_neighborhood: negative radius");
  VertexSet seen(g.order());
  std::deque<int> frontier;
  for (int s : sources) {
    if (s < 0 || s >= g.order()) throw std::out_of_range("r_neighborhood source");
    if (!seen.contains(s)) {
      seen.insert(s);
      frontier.push_back(s);
    }
  }
  for (int depth = 0; depth < r && !frontier.empty(); ++depth) {
    std::deque<int> next;
    for (int u : frontier) {
      g.neighbors(u).for_each([&](int v) {
        if (!seen.contains(v)) {
          seen.insert(v);
          next.push_back(v);
        }
      });
    }
    frontier = std::move(next);
  }
  return seen;
}

/// Shortest path witness. length() == d(front, back) in the host graph.
struct Geodesic {
  std::vector<int> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

namespace detail {

/// Walk back from target to source picking the lowest-numbered predecessor
/// at each level. Deterministic witnesses.
inline Geodesic trace_geodesic(const Graph& g, const DistanceVector& dv, int target) {
  std::vector<int> rev{target};
  int cur = target;
  while (cur != dv.source) {
    int dcur = *dv.dist[cur];
    int parent = -1;
    g.neighbors(cur).for_each([&](int u) {
      if (parent < 0 && dv.dist[u] && *dv.dist[u] == dcur - 1) parent = u;
    });
    rev.push_back(parent);
    cur = parent;
  }
  return Geodesic{std::vector<int>(rev.rbegin(), rev.rend())};
}

}  // namespace detail

inline Geodesic find_geodesic(const Graph& g, int x, int y) {
  auto dv = bfs_distances(g, x);
  if (!dv.dist[y])
    throw std::invalid_argument("find_geodesic: vertices in different components");
  return detail::trace_geodesic(g, dv, y);
}

/// Geodesic of length exactly k starting at v, ending at the lowest-numbered
/// vertex at distance k; nullopt when eccentricity(v) < k.
inline std::optional<Geodesic> geodesic_from(const Graph& g, int v, int k) {
  auto dv = bfs_distances(g, v);
  for (int t = 0; t < g.order(); ++t)
    if (dv.dist[t] && *dv.dist[t] == k) return detail::trace_geodesic(g, dv, t);
  return std::nullopt;
}

}  // namespace powergraph
