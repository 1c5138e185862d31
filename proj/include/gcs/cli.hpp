#ifndef GCS_CLI_HPP
#define GCS_CLI_HPP

// Command-line surface. Every command writes a deterministic payload to
// stdout and human-readable notes to stderr, with the exit-code contract:
// 0 success, 1 verification discrepancy, 2 input error, 3 budget exceeded.

#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gcs/classify.hpp"
#include "gcs/enumerate.hpp"
#include "gcs/errors.hpp"
#include "gcs/expression.hpp"
#include "gcs/graph.hpp"
#include "gcs/graph_io.hpp"
#include "gcs/json_io.hpp"
#include "gcs/simple_digraph.hpp"

namespace gcs {

struct CommandResult {
  int exit_code = 0;
  std::string out; // payload
  std::string log; // human-readable notes
};

/// Permutation input: either cycles of edge identifiers, "(e1 e2)(e3 e4 e5)",
/// or a one-line list naming the image of every edge in declaration order.
inline std::vector<std::size_t> parse_edge_permutation(const Graph& g, std::string_view text) {
  const std::size_t n = g.edge_count();
  std::vector<std::size_t> sigma(n);
  for (std::size_t e = 0; e < n; ++e) sigma[e] = e;
  auto tokens_of = [](std::string_view s) {
    std::vector<std::string> toks;
    std::string cur;
    for (char c : s) {
      if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
        if (!cur.empty()) toks.push_back(std::move(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) toks.push_back(std::move(cur));
    return toks;
  };

  if (text.find('(') != std::string_view::npos) {
    std::vector<char> moved(n, 0);
    std::size_t pos = 0;
    while (pos < text.size()) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos >= text.size()) break;
      if (text[pos] != '(') throw ParseError("expected '(' in cycle notation");
      std::size_t close = text.find(')', pos);
      if (close == std::string_view::npos) throw ParseError("unbalanced '(' in cycle notation");
      auto ids = tokens_of(text.substr(pos + 1, close - pos - 1));
      if (ids.empty()) throw ParseError("empty cycle");
      std::vector<std::size_t> cycle;
      for (const auto& id : ids) cycle.push_back(g.edge(id));
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (moved[cycle[i]]) {
          throw ParseError("edge '" + g.edge_id(cycle[i]) + "' appears in two cycles");
        }
        moved[cycle[i]] = 1;
        sigma[cycle[i]] = cycle[(i + 1) % cycle.size()];
      }
      pos = close + 1;
    }
    return sigma;
  }

  auto ids = tokens_of(text);
  if (ids.size() != n) {
    throw ParseError("one-line permutation must list all " + std::to_string(n) + " edges");
  }
  std::vector<char> used(n, 0);
  for (std::size_t e = 0; e < n; ++e) {
    sigma[e] = g.edge(ids[e]);
    if (used[sigma[e]]) throw ParseError("edge '" + ids[e] + "' listed twice");
    used[sigma[e]] = 1;
  }
  return sigma;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline GraphPtr load_graph(const std::string& path) {
  return std::make_shared<const Graph>(parse_graph(read_file(path)));
}

} // namespace detail

inline CommandResult run_cli(const std::vector<std::string>& args) {
  CommandResult result;
  std::ostringstream out;
  std::ostringstream log;

  CLI::App app{"Exact computation in graph C*-algebras and their quantum symmetries"};
  app.require_subcommand(1);

  std::string graph_file, perm_text, expr_text, family_name, format = "json";
  std::size_t n_arg = 1, vmax = 2, emax = 2;
  std::size_t factorial_budget = kDefaultFactorialBudget;
  std::string theorem;

  auto* classify_cmd = app.add_subcommand("classify", "Classify a graph's quantum symmetry");
  classify_cmd->add_option("graph", graph_file, "graph file (text or JSON)")->required();

  auto* perm_cmd = app.add_subcommand("check-perm", "Check one edge permutation for admissibility");
  perm_cmd->add_option("graph", graph_file)->required();
  perm_cmd->add_option("permutation", perm_text, "cycles '(e1 e2)' or one-line image list")
      ->required();

  auto* verify_cmd = app.add_subcommand("verify", "Exhaustively verify a classification statement");
  verify_cmd->add_option("--theorem", theorem, "et1 | prop31")->required();
  verify_cmd->add_option("--vmax", vmax, "max vertex count (et1)");
  verify_cmd->add_option("--emax", emax, "max edge count (et1)");
  verify_cmd->add_option("--n", n_arg, "vertex count (prop31)");
  verify_cmd->add_option("--budget-factorial", factorial_budget, "edge budget for brute force");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate an algebra expression to normal form");
  eval_cmd->add_option("graph", graph_file)->required();
  eval_cmd->add_option("expression", expr_text)->required();
  eval_cmd->add_option("--format", format, "json | text");

  auto* fmatrix_cmd = app.add_subcommand("fmatrix", "Report the diagonal matrix F and its scalarity");
  fmatrix_cmd->add_option("graph", graph_file)->required();

  auto* generate_cmd = app.add_subcommand("generate", "Emit a named family graph");
  generate_cmd->add_option("family", family_name,
                           "Ln | DisjointLoops | C2 | P2 | Son | IntoStar | Kn | KnComplement")
      ->required();
  generate_cmd->add_option("n", n_arg, "family size (ignored by C2 and P2)");
  std::string gen_format = "text";
  generate_cmd->add_option("--format", gen_format, "text | json");

  std::vector<const char*> argv;
  argv.push_back("gcs");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());

    if (classify_cmd->parsed()) {
      GraphPtr g = detail::load_graph(graph_file);
      ClassificationVerdict v = classify(*g);
      out << verdict_to_json(*g, v).dump() << '\n';
      log << "classify: family " << family_label(v.family) << ", group "
          << group_label(v.group, v.n) << '\n';
    } else if (perm_cmd->parsed()) {
      GraphPtr g = detail::load_graph(graph_file);
      auto sigma = parse_edge_permutation(*g, perm_text);
      PermutationCertificate cert = admissible_permutation(g, sigma);
      out << certificate_to_json(*g, cert).dump() << '\n';
      log << "check-perm: " << (cert.admissible ? "admissible" : "inadmissible") << '\n';
    } else if (verify_cmd->parsed()) {
      if (theorem == "et1") {
        TheoremReport report = verify_theorem(vmax, emax, factorial_budget);
        out << theorem_report_to_json(report).dump() << '\n';
        log << "verify et1: " << report.graphs << " graphs, " << report.positives
            << " positives, " << report.discrepancies.size() << " discrepancies\n";
        result.exit_code = report.ok() ? 0 : 1;
      } else if (theorem == "prop31") {
        Prop31Report report = verify_prop31(n_arg);
        out << prop31_report_to_json(report).dump() << '\n';
        log << "verify prop31: " << report.digraphs << " digraphs, " << report.full_symmetry
            << " graphs with full symmetry\n";
        result.exit_code = report.ok() ? 0 : 1;
      } else {
        throw ParseError("unknown theorem '" + theorem + "' (expected et1 or prop31)");
      }
    } else if (eval_cmd->parsed()) {
      GraphPtr g = detail::load_graph(graph_file);
      AlgebraElement element = parse_expression(g, expr_text);
      const std::string rendered = element_to_string(element);
      if (format == "text") {
        out << rendered << '\n';
      } else if (format == "json") {
        nlohmann::json j;
        j["expression"] = expr_text;
        j["normal_form"] = rendered;
        j["terms"] = element.terms().size();
        out << j.dump() << '\n';
      } else {
        throw ParseError("unknown format '" + format + "'");
      }
      log << "eval: " << element.terms().size() << " normal-form terms\n";
    } else if (fmatrix_cmd->parsed()) {
      GraphPtr g = detail::load_graph(graph_file);
      AutFReport report = aut_f_report(g);
      out << autf_report_to_json(*g, report).dump() << '\n';
      log << "fmatrix: " << (report.f.scalar ? "scalar" : "non-scalar") << '\n';
    } else if (generate_cmd->parsed()) {
      auto family = family_from_string(family_name);
      if (!family) throw ParseError("unknown family '" + family_name + "'");
      Graph g = make_family(*family, n_arg);
      if (gen_format == "text") {
        out << serialize_graph_text(g) << '\n';
      } else if (gen_format == "json") {
        out << serialize_graph_json(g) << '\n';
      } else {
        throw ParseError("unknown format '" + gen_format + "'");
      }
      log << "generate: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    result.exit_code = 0;
  } catch (const CLI::ParseError& e) {
    log << "usage error: " << e.what() << '\n';
    result.exit_code = 2;
  } catch (const BudgetError& e) {
    log << "budget exceeded: " << e.what() << '\n';
    result.exit_code = 3;
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    result.exit_code = 2;
  }

  result.out = out.str();
  result.log = log.str();
  return result;
}

} // namespace gcs

#endif // GCS_CLI_HPP
