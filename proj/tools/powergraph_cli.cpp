// Command-line front end: generate the extremal families, compute graph
// powers, check the edge-growth bounds, audit the proof-machinery claims,
// and sweep random regular instances.
//
// Exit codes: 0 = holds / audit pass, 1 = violation, 2 = inapplicable.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "powergraph/bounds.hpp"
#include "powergraph/diagnostics.hpp"
#include "powergraph/generators.hpp"
#include "powergraph/io.hpp"
#include "powergraph/power.hpp"

namespace pg = powergraph;

namespace {

constexpr int kExitHolds = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInapplicable = 2;

pg::Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return pg::read_edge_list(in);
}

void save_graph(const std::string& path, const pg::Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  pg::write_edge_list(out, g);
}

// "a..b" or a single integer
std::vector<int> parse_range(const std::string& spec) {
  auto dots = spec.find("..");
  if (dots == std::string::npos) return {std::stoi(spec)};
  int lo = std::stoi(spec.substr(0, dots));
  int hi = std::stoi(spec.substr(dots + 2));
  std::vector<int> out;
  for (int m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

std::string verdict_tsv(const pg::Verdict& v) {
  std::ostringstream os;
  if (!v.applicable) {
    os << "inapplicable theorem=" << v.theorem << " reason=\"" << v.reason << "\"";
  } else {
    os << (v.holds ? "holds" : "VIOLATION") << " theorem=" << v.theorem
       << " bound=" << v.bound.str() << " observed=" << v.observed.str()
       << " margin=" << v.margin.str();
    if (!v.provenance.empty()) os << " provenance=\"" << v.provenance << "\"";
  }
  return os.str();
}

int verdict_exit(const pg::Verdict& v) {
  if (!v.applicable) return kExitInapplicable;
  return v.holds ? kExitHolds : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph powers toolkit: extremal families, edge-growth bounds, "
               "proof-claim audits"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "JSON output instead of TSV");

  // POWERGRAPH_THREADS caps internal parallelism; everything here is
  // deterministic and currently single-threaded, so any cap is honored.
  if (const char* t = std::getenv("POWERGRAPH_THREADS")) {
    if (std::atoi(t) < 1) {
      std::cerr << "POWERGRAPH_THREADS must be a positive integer\n";
      return kExitViolation;
    }
  }

  // --- gen ---
  auto* gen = app.add_subcommand("gen", "generate a graph family instance");
  std::string family, out_path, blueprint_path;
  int r = 0, m = 0, gn = 0, gd = 0;
  long long prime = 0;
  std::vector<long long> gen_set;
  std::uint64_t seed = 1;
  gen->add_option("family", family, "Gm|Hm|cayley|random")->required();
  gen->add_option("--r", r, "power/diameter parameter");
  gen->add_option("--m", m, "family size parameter");
  gen->add_option("--p", prime, "prime modulus (cayley)");
  gen->add_option("--set", gen_set, "generating set (cayley)");
  gen->add_option("--n", gn, "vertex count (random)");
  gen->add_option("--d", gd, "degree (random)");
  gen->add_option("--seed", seed, "RNG seed (random)");
  gen->add_option("-o,--output", out_path, "edge-list output file");
  gen->add_option("--blueprint", blueprint_path, "layer blueprint output file");

  // --- power ---
  auto* power = app.add_subcommand("power", "compute the r-th power of a graph");
  std::string in_path;
  int pr = 0;
  std::string pow_out;
  power->add_option("input", in_path, "edge-list input file")->required();
  power->add_option("--r", pr, "power")->required();
  power->add_option("-o,--output", pow_out, "edge-list output file");

  // --- verify ---
  auto* verify = app.add_subcommand("verify", "check the applicable bound theorem");
  std::string v_in;
  int vr = 0;
  bool v_cayley = false;
  bool v_add_loops = false;
  verify->add_option("input", v_in)->required();
  verify->add_option("--r", vr)->required();
  verify->add_flag("--cayley", v_cayley, "treat input as a Cayley graph (ratio >= r)");
  verify->add_flag("--add-loops", v_add_loops, "add a loop at every vertex first");

  // --- claims ---
  auto* claims = app.add_subcommand("claims", "audit the proof-machinery claims");
  std::string c_in;
  int cr = 0;
  std::uint64_t c_seed = 1;
  bool c_add_loops = false;
  claims->add_option("input", c_in)->required();
  claims->add_option("--r", cr)->required();
  claims->add_option("--seed", c_seed, "sampling seed for large graphs");
  claims->add_flag("--add-loops", c_add_loops, "add a loop at every vertex first");

  // --- convergence ---
  auto* conv = app.add_subcommand("convergence", "ratio-vs-bound table over m");
  std::string conv_family, m_range;
  int conv_r = 0;
  conv->add_option("family", conv_family, "Gm|Hm")->required();
  conv->add_option("--r", conv_r)->required();
  conv->add_option("--m", m_range, "m value or range a..b")->required();

  // --- scan ---
  auto* scan = app.add_subcommand("scan", "theorem sweep over random regular graphs");
  int s_n = 0, s_d = 0, s_r = 0, s_trials = 1;
  std::uint64_t s_seed = 1;
  scan->add_option("--n", s_n)->required();
  scan->add_option("--d", s_d)->required();
  scan->add_option("--r", s_r)->required();
  scan->add_option("--trials", s_trials);
  scan->add_option("--seed", s_seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      pg::Graph g(0, {}, false);
      std::optional<pg::LayeredBlueprint> bp;
      std::ostringstream audit_line;
      bool pass = true;
      if (family == "Gm" || family == "Hm") {
        auto built = family == "Gm" ? pg::build_Gm(r, m) : pg::build_Hm(r, m);
        g = built.first;
        bp = built.second;
        auto a = family == "Gm" ? pg::audit_Gm(r, m) : pg::audit_Hm(r, m);
        pass = a.pass;
        audit_line << "order=" << a.actual_order << " degree="
                   << (a.regular_degree ? std::to_string(*a.regular_degree)
                                        : std::string("irregular"))
                   << " diameter=" << (a.diam ? std::to_string(*a.diam) : "inf")
                   << " " << (pass ? "PASS" : "FAIL");
      } else if (family == "cayley") {
        g = pg::cayley_graph(prime, gen_set);
        auto dm = pg::diameter(g);
        pass = g.is_regular() && pg::is_connected(g);
        audit_line << "order=" << g.order() << " degree=" << g.degree(0)
                   << " diameter=" << (dm ? std::to_string(*dm) : "inf") << " "
                   << (pass ? "PASS" : "FAIL");
      } else if (family == "random") {
        g = pg::random_regular_connected(gn, gd, seed);
        pass = g.is_regular() && g.degree(0) == gd && pg::is_connected(g);
        audit_line << "order=" << g.order() << " degree=" << g.degree(0) << " "
                   << (pass ? "PASS" : "FAIL");
      } else {
        std::cerr << "unknown family '" << family << "' (Gm|Hm|cayley|random)\n";
        return kExitViolation;
      }
      if (!out_path.empty()) save_graph(out_path, g);
      if (!blueprint_path.empty() && bp) {
        std::ofstream bout(blueprint_path);
        pg::write_blueprint(bout, family, r, m, *bp);
      }
      std::cout << audit_line.str() << "\n";
      return pass ? kExitHolds : kExitViolation;
    }

    if (*power) {
      auto g = load_graph(in_path);
      auto res = pg::graph_power(g, pr);
      if (!pow_out.empty()) {
        std::ofstream out(pow_out);
        pg::write_power_result(out, res);
      }
      std::cout << "r=" << res.r << " e_base=" << res.base_edges
                << " e_power=" << res.power_edges << "\n";
      return kExitHolds;
    }

    if (*verify) {
      auto g = load_graph(v_in);
      if (v_add_loops) g = pg::add_loops(g);
      auto v = pg::verify(g, vr, v_cayley);
      std::cout << (json ? pg::verdict_json(v) : verdict_tsv(v)) << "\n";
      return verdict_exit(v);
    }

    if (*claims) {
      auto g = load_graph(c_in);
      if (c_add_loops) g = pg::add_loops(g);
      auto rep = pg::audit_claims(g, cr, c_seed);
      pg::write_report(std::cout, rep);
      if (!rep.applicable) return kExitInapplicable;
      return rep.all_hold() ? kExitHolds : kExitViolation;
    }

    if (*conv) {
      if ((conv_family == "Gm") == (conv_r % 3 == 0)) {
        std::cerr << (conv_family == "Gm" ? "Gm requires r != 0 mod 3\n"
                                          : "Hm requires r = 0 mod 3\n");
        return kExitInapplicable;
      }
      auto rows = pg::convergence_table(conv_r, parse_range(m_range));
      std::cout << "m\torder\tratio\tbound\tgap\n";
      for (const auto& row : rows)
        std::cout << row.m << "\t" << row.order << "\t" << row.ratio.str() << "\t"
                  << row.bound.str() << "\t" << row.gap.str() << "\n";
      return kExitHolds;
    }

    if (*scan) {
      int violations = 0, inapplicable = 0, holds = 0;
      for (int t = 0; t < s_trials; ++t) {
        auto g = pg::random_regular_connected(s_n, s_d, s_seed + t);
        auto v = pg::verify(g, s_r);
        std::cout << "trial=" << t << " " << verdict_tsv(v) << "\n";
        if (!v.applicable)
          ++inapplicable;
        else if (v.holds)
          ++holds;
        else
          ++violations;
      }
      std::cout << "trials=" << s_trials << " holds=" << holds
                << " inapplicable=" << inapplicable << " violations=" << violations
                << "\n";
      return violations == 0 ? kExitHolds : kExitViolation;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInapplicable;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitHolds;
}
