#pragma once

#include <stdexcept>
#include <string>

#include "powergraph/graph.hpp"
#include "powergraph/power.hpp"
#include "powergraph/rational.hpp"

namespace powergraph {

using BoundValue = Rational;

inline int ceil_div3(int r) { return (r + 2) / 3; }

/// Ratio lower bound for connected regular graphs of diameter >= r:
/// (r+3)/3 - 3/(2(r+3)) when r = 0 mod 3, otherwise ceil(r/3).
inline Rational regular_ratio_bound(int r) {
  if (r < 3) throw std::invalid_argument("regular_ratio_bound: r must be >= 3");
  if (r % 3 == 0) return Rational(r + 3, 3) - Rational(3, 2 * (r + 3));
  return Rational(ceil_div3(r));
}

/// e(G^r) lower bound for connected loopless graphs with min degree delta.
inline Rational min_degree_edge_bound(int r, int delta, long long n) {
  if (r < 3) throw std::invalid_argument("min_degree_edge_bound: r must be >= 3");
  if (delta < 1 || n < 1)
    throw std::invalid_argument("min_degree_edge_bound: need delta >= 1, n >= 1");
  Rational coeff = (r % 3 == 0)
                       ? Rational(r + 3, 6) - Rational(3, 4 * (r + 3))
                       : Rational(ceil_div3(r), 2);
  return coeff * Rational(delta) * Rational(n);
}

/// e(G^r) lower bound for connected loops-allowed graphs; the theorem
/// hypothesis requires r >= 6.
inline Rational loops_edge_bound(int r, int delta, long long n) {
  if (r < 6) throw std::invalid_argument("loops_edge_bound: r must be >= 6");
  if (delta < 1 || n < 1)
    throw std::invalid_argument("loops_edge_bound: need delta >= 1, n >= 1");
  Rational coeff = (r % 3 == 0)
                       ? Rational(r + 3, 6) - Rational(3, 4 * (r + 3))
                       : Rational(ceil_div3(r), 2);
  return coeff * Rational(delta) * Rational(n) + Rational(n, 2);
}

struct Verdict {
  std::string theorem;
  bool applicable = false;
  std::string reason;
  BoundValue bound;
  BoundValue observed;
  bool holds = false;
  BoundValue margin;
  std::string provenance;  // set when the bound's r-case is proved elsewhere
};

/// Picks the applicable theorem for g and checks it exactly. Inapplicable
/// inputs name the failed hypothesis and never report "holds".
inline Verdict verify(const Graph& g, int r, bool cayley = false) {
  Verdict v;
  if (!is_connected(g)) {
    v.theorem = "none";
    v.reason = "disconnected";
    return v;
  }
  auto d = diameter(g);

  if (cayley && !g.loops_allowed()) {
    v.theorem = "cayley-ratio";
    if (!d || r >= *d) {
      v.reason = "requires r < diameter";
      return v;
    }
    v.applicable = true;
    v.bound = Rational(r);
    v.observed = power_ratio(g, r);
    v.holds = v.observed >= v.bound;
    v.margin = v.observed - v.bound;
    return v;
  }

  if (!d || *d < r) {
    v.theorem = "none";
    v.reason = "diameter < r";
    return v;
  }

  if (g.loops_allowed()) {
    v.theorem = "loops-edge";
    if (r < 6) {
      v.reason = "r < 6";
      return v;
    }
    v.applicable = true;
    v.bound = loops_edge_bound(r, g.min_degree(), g.order());
    v.observed = Rational(graph_power(g, r).power_edges);
  } else if (g.is_regular()) {
    v.theorem = "regular-ratio";
    if (r < 3) {
      v.reason = "r < 3";
      return v;
    }
    v.applicable = true;
    v.bound = regular_ratio_bound(r);
    v.observed = power_ratio(g, r);
  } else {
    v.theorem = "min-degree-edge";
    if (r < 3) {
      v.reason = "r < 3";
      return v;
    }
    v.applicable = true;
    v.bound = min_degree_edge_bound(r, g.min_degree(), g.order());
    v.observed = Rational(graph_power(g, r).power_edges);
  }
  if (r == 3) v.provenance = "external: DeVos-Thomasse";
  v.holds = v.observed >= v.bound;
  v.margin = v.observed - v.bound;
  return v;
}

/// Flat JSON record; rationals rendered "p/q".
inline std::string verdict_json(const Verdict& v) {
  std::string s = "{";
  s += "\"theorem\":\"" + v.theorem + "\",";
  s += "\"applicable\":" + std::string(v.applicable ? "true" : "false") + ",";
  s += "\"reason\":\"" + v.reason + "\",";
  s += "\"bound\":\"" + v.bound.str() + "\",";
  s += "\"observed\":\"" + v.observed.str() + "\",";
  s += "\"holds\":" + std::string(v.holds ? "true" : "false") + ",";
  s += "\"margin\":\"" + v.margin.str() + "\"";
  if (!v.provenance.empty()) s += ",\"provenance\":\"" + v.provenance + "\"";
  s += "}";
  return s;
}

}  // namespace powergraph
