#include <catch2/catch_amalgamated.hpp>
#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "powergraph/diagnostics.hpp"
#include "powergraph/generators.hpp"

using namespace powergraph;

namespace {

Graph loopy_Hm(int r, int m) { return add_loops(build_Hm(r, m).first); }

}  // namespace

TEST_CASE("classify on loopy H_1") {
  auto g = loopy_Hm(6, 1);
  auto [h, bp] = build_Hm(6, 1);
  auto map = classify(g, 6);
  CHECK(map.delta == 5);
  // end-layer vertices see everything except the opposite end layer
  for (int v = 0; v < g.order(); ++v) {
    int layer = bp.layer_of[v];
    if (layer == 0 || layer == 7) {
      CHECK(map.nr_size[v] == 13);
      CHECK_FALSE(map.sufficient[v]);
    } else {
      CHECK(map.nr_size[v] >= 15);
      CHECK(map.sufficient[v]);
    }
  }
}

TEST_CASE("classify hypothesis violations") {
  auto loopy_k8 = add_loops(oracles::complete_graph(8));
  CHECK_THROWS_AS(classify(loopy_k8, 6), std::invalid_argument);  // diameter < r
  CHECK_THROWS_AS(classify(loopy_Hm(6, 1), 7), std::invalid_argument);  // residue
  CHECK_THROWS_AS(classify(build_Hm(6, 1).first, 6), std::invalid_argument);  // loopless
}

TEST_CASE("classify on loopy cycle: all sufficient") {
  auto g = oracles::cycle_graph(21, /*loopy=*/true);
  auto map = classify(g, 6);
  CHECK(map.delta == 3);
  for (int v = 0; v < 21; ++v) {
    CHECK(map.nr_size[v] == 13);
    CHECK(map.sufficient[v]);
  }
}

TEST_CASE("classification threshold is exact") {
  auto g = loopy_Hm(6, 1);
  auto map = classify(g, 6);
  int threshold = (6 / 3 + 1) * map.delta;
  for (int v = 0; v < g.order(); ++v)
    CHECK(map.sufficient[v] == (map.nr_size[v] >= threshold));
}

TEST_CASE("partition_insufficient on loopy H_m") {
  auto g1 = loopy_Hm(6, 1);
  auto part1 = partition_insufficient(classify(g1, 6), g1);
  REQUIRE(part1.class_count() == 2);
  CHECK(part1.classes[0].size() == 3);
  CHECK(part1.classes[1].size() == 3);

  auto g2 = loopy_Hm(6, 2);
  auto part2 = partition_insufficient(classify(g2, 6), g2);
  REQUIRE(part2.class_count() == 2);
  CHECK(part2.classes[0].size() == 5);
  CHECK(part2.classes[1].size() == 5);

  // cross-class distance >= r+1, within-class <= 2
  for (int which = 0; which < 2; ++which) {
    const auto& part = which == 0 ? part1 : part2;
    const auto& g = which == 0 ? g1 : g2;
    for (int i = 0; i < part.class_count(); ++i) {
      for (int a : part.classes[i])
        for (int b : part.classes[i])
          CHECK(find_geodesic(g, a, b).length() <= 2);
      for (int j = i + 1; j < part.class_count(); ++j)
        for (int a : part.classes[i])
          for (int b : part.classes[j])
            CHECK(find_geodesic(g, a, b).length() >= 7);
    }
  }
}

TEST_CASE("partition of all-sufficient input is empty") {
  auto g = oracles::cycle_graph(21, true);
  auto part = partition_insufficient(classify(g, 6), g);
  CHECK(part.class_count() == 0);
}

TEST_CASE("audit_claims on loopy H_1") {
  auto g = loopy_Hm(6, 1);
  auto rep = audit_claims(g, 6);
  REQUIRE(rep.applicable);
  CHECK(rep.all_hold());
  for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6", "C7", "C8"})
    CHECK(rep.claim(id).status != ClaimStatus::fail);
  // the pair claims actually fire on this instance
  CHECK(rep.claim("C2").status == ClaimStatus::pass);
  CHECK(rep.claim("C7").status == ClaimStatus::pass);

  // C7 is tight here: |N^6(x)| = 13 = |X_i| + 2 delta = 3 + 10
  auto map = classify(g, 6);
  auto part = partition_insufficient(map, g);
  for (const auto& cls : part.classes)
    for (int x : cls)
      CHECK(map.nr_size[x] == static_cast<int>(cls.size()) + (6 / 3) * map.delta);
}

TEST_CASE("audit_claims C8 arithmetic on loopy H_1") {
  auto g = loopy_Hm(6, 1);
  // 2*127 - (17/6)*5*16 - 16 = 34/3; rhs = 2*(3 - 5/2)^2 = 1/2
  long long pe = graph_power(g, 6).power_edges;
  CHECK(pe == 127);
  Rational lhs = Rational(2 * pe) - Rational(17, 6) * Rational(5) * Rational(16) -
                 Rational(16);
  CHECK(lhs == Rational(34, 3));
  CHECK(lhs >= Rational(1, 2));
}

TEST_CASE("audit_claims on loopy cycle: pair claims vacuous") {
  auto g = oracles::cycle_graph(21, true);
  auto rep = audit_claims(g, 6);
  REQUIRE(rep.applicable);
  CHECK(rep.all_hold());
  for (const char* id : {"C2", "C5", "C6", "C7"})
    CHECK(rep.claim(id).status == ClaimStatus::vacuous);
  CHECK(rep.claim("C1").status == ClaimStatus::pass);
  CHECK(rep.claim("C8").status == ClaimStatus::pass);
}

TEST_CASE("audit_claims inapplicable input") {
  auto rep = audit_claims(add_loops(oracles::complete_graph(6)), 6);
  CHECK_FALSE(rep.applicable);
  CHECK(rep.reason.find("diameter") != std::string::npos);
  CHECK_FALSE(rep.all_hold());
}

TEST_CASE("report serialization") {
  auto rep = audit_claims(loopy_Hm(6, 1), 6);
  std::ostringstream os;
  write_report(os, rep);
  auto text = os.str();
  CHECK(text.find("C1 pass") != std::string::npos);
  CHECK(text.find("C8 pass") != std::string::npos);
  CHECK(std::count(text.begin(), text.end(), '\n') == 8);
}

TEST_CASE("easy_case_witness on loopy C_15 at r=4") {
  auto g = oracles::cycle_graph(15, true);
  auto ws = easy_case_witness(g, 4);
  REQUIRE(ws.size() == 15);
  for (const auto& w : ws) {
    REQUIRE(w.path.has_value());
    CHECK(w.path->length() == 3);
    // N(P) spans six consecutive cycle vertices
    CHECK(w.certified == 6);
    CHECK(w.certified >= 2 * 3);  // ceil(4/3) * delta
  }
}

TEST_CASE("easy_case_witness on loopy G_m") {
  auto g = add_loops(build_Gm(4, 3).first);
  auto ws = easy_case_witness(g, 4);
  int threshold = 2 * g.min_degree();
  for (const auto& w : ws) {
    CHECK(w.certified >= threshold);
    CHECK(r_neighborhood(g, {w.vertex}, 4).count() >= threshold);
  }
}

TEST_CASE("easy_case_witness whole-graph fallback") {
  // loopy path of diameter exactly r: middle vertices have eccentricity
  // below r-1, so their certificate is the whole graph
  auto g = add_loops(oracles::path_graph(6));  // diameter 5
  auto ws = easy_case_witness(g, 5);
  bool any_whole = false, any_path = false;
  for (const auto& w : ws) {
    if (w.whole_graph) any_whole = true;
    if (w.path) any_path = true;
  }
  CHECK(any_path);
  CHECK(any_whole);
}

TEST_CASE("easy_case_witness rejects wrong residue") {
  CHECK_THROWS_AS(easy_case_witness(loopy_Hm(6, 1), 6), std::invalid_argument);
}

TEST_CASE("master property: claims pass on hypothesis-satisfying graphs") {
  for (int r : {6, 9})
    for (int m : {1, 2, 3}) {
      auto rep = audit_claims(loopy_Hm(r, m), r);
      REQUIRE(rep.applicable);
      CHECK(rep.all_hold());
    }
  for (int n = 14; n <= 24; n += 3) {
    auto rep = audit_claims(oracles::cycle_graph(n, true), 6);
    REQUIRE(rep.applicable);
    CHECK(rep.all_hold());
  }
}

TEST_CASE("at most one pair of classes at distance exactly r+1") {
  for (int m : {1, 2, 3}) {
    auto g = loopy_Hm(6, m);
    auto part = partition_insufficient(classify(g, 6), g);
    int at_r_plus_1 = 0;
    for (int i = 0; i < part.class_count(); ++i)
      for (int j = i + 1; j < part.class_count(); ++j) {
        int best = g.order();
        for (int a : part.classes[i])
          for (int b : part.classes[j])
            best = std::min(best, find_geodesic(g, a, b).length());
        CHECK(best >= 7);
        if (best == 7) ++at_r_plus_1;
      }
    CHECK(at_r_plus_1 <= 1);
  }
}
