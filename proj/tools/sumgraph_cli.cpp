// sumgraph: command-line front end for subgroup sum graphs and their codes.
//
// Exit status: 0 success, 1 decider/oracle disagreement, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "sumgraph/classifiers.hpp"
#include "sumgraph/codes.hpp"
#include "sumgraph/expr.hpp"
#include "sumgraph/io.hpp"
#include "sumgraph/scan.hpp"

using namespace sumgraph;

namespace {

// "@file.json" loads a Cayley table document; anything else is a group expression.
Group load_group(const std::string& text, std::size_t cap) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw Error(ErrorKind::BadParameter, "cannot open '" + text.substr(1) + "'");
    Json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::BadParameter, std::string("invalid JSON: ") + e.what());
    }
    return group_from_json(j, cap);
  }
  return evaluate(parse_group_expr(text), cap);
}

void write_output(const std::string& path, const std::string& body) {
  if (path.empty() || path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::BadParameter, "cannot write '" + path + "'");
  out << body;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subgroup sum graphs: perfect codes, total perfect codes and their oracles"};
  app.require_subcommand(1);
  app.footer(
      "Group expressions: Z<n>, D<order> (even, >= 6), Dic<n> (order 4n), Q8, E2^<t>, products with 'x',\n"
      "parentheses. '@file.json' reads a Cayley table. SUMGRAPH_MAX_ORDER raises the order cap (default 512).");

  std::string expr, selector, format = "dot", out_path, method = "bruteforce", families_arg;
  bool extended = false, total = false, construct = false, oracle = false, colour = false, generic_only = false;
  std::size_t max_order = 48;

  auto* normals_cmd = app.add_subcommand("normals", "List normal subgroups in canonical order");
  normals_cmd->add_option("group", expr, "Group expression")->required();

  auto* table_cmd = app.add_subcommand("table", "Print the Cayley table document");
  table_cmd->add_option("group", expr, "Group expression")->required();

  auto* graph_cmd = app.add_subcommand("graph", "Export the subgroup sum graph");
  graph_cmd->add_option("group", expr, "Group expression")->required();
  graph_cmd->add_option("--subgroup", selector, "gen:<label>,... or index:<k>")->required();
  graph_cmd->add_flag("--extended", extended, "Use xy in H instead of xy in H\\{e}");
  graph_cmd->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_flag("--color-components", colour, "Fill DOT vertices by connected component");
  graph_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* code_cmd = app.add_subcommand("code", "Decide whether a (total) perfect code exists");
  code_cmd->add_option("group", expr, "Group expression")->required();
  code_cmd->add_option("--subgroup", selector, "gen:<label>,... or index:<k>")->required();
  code_cmd->add_flag("--extended", extended, "Extended graph");
  code_cmd->add_flag("--total", total, "Total perfect code");
  code_cmd->add_flag("--construct", construct, "Include the witness code");
  code_cmd->add_flag("--oracle", oracle, "Use exhaustive search instead of the characterisation");

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare all deciders with the oracle on every normal subgroup");
  cross_cmd->add_option("group", expr, "Group expression")->required();

  auto* scan_cmd = app.add_subcommand("scan", "Sweep built-in families against the oracle (JSON lines)");
  scan_cmd->add_option("--max-order", max_order, "Largest group order")->check(CLI::Range(1, 1 << 20));
  scan_cmd->add_option("--families", families_arg, "Comma list of cyclic,dihedral,dicyclic,abelian,products");
  scan_cmd->add_flag("--generic-only", generic_only, "Skip the family-specific deciders");
  scan_cmd->add_option("--out", out_path, "Output file (default stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Group classifications");
  classify_cmd->require_subcommand(1);
  auto* cp_cmd = classify_cmd->add_subcommand("code-perfect", "Does every normal subgroup give a perfect code?");
  cp_cmd->add_option("group", expr, "Group expression")->required();
  cp_cmd->add_option("--method", method, "bruteforce or dedekind")->check(CLI::IsMember({"bruteforce", "dedekind"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::size_t cap = max_order_from_env();

    if (*normals_cmd) {
      const Group g = load_group(expr, cap);
      Json list = Json::array();
      const auto normals = normal_subgroups(g);
      for (std::size_t i = 0; i < normals.size(); ++i) list.push_back(subgroup_to_json(g, normals[i], i));
      std::cout << Json{{"group", g.tag().to_string()}, {"order", g.order()}, {"normal_subgroups", list}}.dump(2)
                << "\n";
      return 0;
    }

    if (*table_cmd) {
      std::cout << group_to_json(load_group(expr, cap)).dump() << "\n";
      return 0;
    }

    if (*graph_cmd) {
      const Group g = load_group(expr, cap);
      const Subgroup h = resolve_subgroup(g, selector);
      const SumGraph graph = build_graph(g, h, extended ? Flavor::Extended : Flavor::Plain);
      write_output(out_path, format == "dot" ? graph_to_dot(g, graph, colour) : graph_to_json(g, graph).dump(2) + "\n");
      return 0;
    }

    if (*code_cmd) {
      const Group g = load_group(expr, cap);
      const Subgroup h = resolve_subgroup(g, selector);
      const Flavor flavor = extended ? Flavor::Extended : Flavor::Plain;
      const CodeKind kind = total ? CodeKind::TotalPerfect : CodeKind::Perfect;
      const Verdict v = oracle ? oracle_verdict(g, h, flavor, kind) : decide(g, h, flavor, kind);
      std::cout << verdict_to_json(g, h, v, construct).dump() << "\n";
      return 0;
    }

    if (*cross_cmd) {
      const Group g = load_group(expr, cap);
      const CrossCheckReport report = cross_check(g);
      for (const auto& e : report.entries) {
        Json j{{"subgroup_index", e.subgroup_index}, {"subgroup", e.subgroup},
               {"flavor", std::string(to_string(e.flavor))}, {"kind", std::string(to_string(e.kind))},
               {"theorem", e.theorem.exists}, {"rule", e.theorem.rule}, {"oracle", e.oracle.exists},
               {"agree", e.agree}, {"witness_valid", e.witness_valid}, {"micros", e.micros}};
        if (!e.agree) j["certificate"] = verdict_to_json(g, Subgroup::from_members(g, e.subgroup), e.theorem, true);
        std::cout << j.dump() << "\n";
      }
      std::cerr << report.group << ": " << report.subgroups << " normal subgroups, " << report.agreements()
                << " agreements, " << report.disagreements() << " disagreements, " << report.invalid_witnesses()
                << " invalid witnesses\n";
      return report.disagreements() == 0 && report.invalid_witnesses() == 0 ? 0 : 1;
    }

    if (*scan_cmd) {
      if (max_order > cap)
        throw Error(ErrorKind::OrderLimit, "--max-order " + std::to_string(max_order) + " exceeds the cap " +
                                               std::to_string(cap) + " (set SUMGRAPH_MAX_ORDER)");
      std::vector<Family> families;
      for (const auto& name : split_commas(families_arg)) families.push_back(parse_family(name));
      if (families.empty()) families = all_families();

      ScanOptions opts;
      opts.family_deciders = !generic_only;
      const auto records = run_scan(builtin_groups(max_order, families), opts);

      std::ostringstream body;
      std::map<std::string, std::pair<std::size_t, std::size_t>> tally;  // decider -> (agree, disagree)
      for (const auto& r : records) {
        body << to_json(r).dump() << "\n";
        auto& t = tally[r.decider];
        (r.agree ? t.first : t.second)++;
      }
      write_output(out_path, body.str());

      std::size_t bad = 0;
      for (const auto& [decider, t] : tally) {
        std::cerr << decider << ": " << t.first << " agree, " << t.second << " disagree\n";
        bad += t.second;
      }
      return bad == 0 ? 0 : 1;
    }

    if (*cp_cmd) {
      const Group g = load_group(expr, cap);
      const auto m = method == "dedekind" ? CodePerfectMethod::Dedekind : CodePerfectMethod::Bruteforce;
      std::cout << Json{{"group", g.tag().to_string()}, {"order", g.order()}, {"method", method},
                        {"code_perfect", is_code_perfect(g, m)}}
                       .dump()
                << "\n";
      return 0;
    }
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n  " << expr << "\n  " << std::string(e.offset(), ' ') << "^\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
