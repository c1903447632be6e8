// Command-line front end. Everything goes through the C interface; human
// tables are rendered from the same JSON the --json mode prints.
#include "curvgraph.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using Json = nlohmann::ordered_json;

namespace {

struct CliError {
  cg_status status;
  std::string message;
};

void check(cg_status status) {
  if (status != CG_OK) throw CliError{status, cg_last_error_message()};
}

std::string take(char* s) {
  std::string out(s);
  cg_string_free(s);
  return out;
}

using GraphPtr = std::unique_ptr<cg_graph, decltype(&cg_graph_free)>;

GraphPtr load(const std::string& path) {
  cg_graph* g = nullptr;
  check(cg_graph_load(path.c_str(), &g));
  return GraphPtr(g, cg_graph_free);
}

int parse_degree(const std::string& text) {
  if (text == "inf" || text == "infinity") return CG_INFINITE;
  try {
    size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw CliError{CG_INVALID_INPUT, "not a degree: " + text};
}

std::string scalar(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  if (v.is_number_float()) {
    std::ostringstream out;
    out.precision(12);
    out << v.get<double>();
    return out.str();
  }
  return v.dump();
}

void render_table(const Json& rows, std::ostream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items())
      if (std::find(columns.begin(), columns.end(), key) == columns.end())
        columns.push_back(key);
  std::vector<size_t> width(columns.size());
  std::vector<std::vector<std::string>> cells;
  for (size_t c = 0; c < columns.size(); ++c) width[c] = columns[c].size();
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? scalar(row[columns[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto print = [&](const std::vector<std::string>& line) {
    for (size_t c = 0; c < line.size(); ++c) {
      out << (c ? "  " : "  ") << line[c] << std::string(width[c] - line[c].size(), ' ');
    }
    out << '\n';
  };
  print(columns);
  for (const auto& line : cells) print(line);
}

void render(const Json& doc, std::ostream& out, const std::string& prefix = "") {
  for (const auto& [key, value] : doc.items()) {
    const std::string name = prefix + key;
    if (value.is_object()) {
      render(value, out, name + ".");
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      out << name << ":\n";
      render_table(value, out);
    } else if (value.is_array()) {
      out << name << ": ";
      for (size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar(value[i]);
      out << '\n';
    } else {
      out << name << ": " << scalar(value) << '\n';
    }
  }
}

void show(const std::string& text, bool json) {
  const Json doc = Json::parse(text);
  if (json) std::cout << doc.dump(2) << '\n';
  else render(doc, std::cout);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Curvature, isoperimetry, growth and spectra of planar tessellations"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Print machine-readable JSON")->ignore_case();

  // generate
  auto* gen = app.add_subcommand("generate", "Generate a ball of G_{p,q} or T_p");
  std::optional<int> gen_p;
  std::string gen_q = "inf";
  std::optional<int> gen_tree;
  int gen_radius = 3;
  std::string gen_out;
  gen->add_option("--p", gen_p, "Vertex degree");
  gen->add_option("--q", gen_q, "Face degree (or inf)");
  gen->add_option("--tree", gen_tree, "Degree of a regular tree");
  gen->add_option("--radius", gen_radius, "Ball radius")->required();
  gen->add_option("--out", gen_out, "Graph JSON output file (stdout if omitted)");

  // curvature
  auto* curv = app.add_subcommand("curvature", "Vertex and sphere curvatures of a graph");
  std::string curv_graph, curv_report = "table";
  curv->add_option("--graph", curv_graph)->required();
  curv->add_option("--report", curv_report)->check(CLI::IsMember({"json", "table"}));

  // cheeger
  auto* cheeger = app.add_subcommand("cheeger", "Cheeger constant bounds");
  std::string ch_graph, ch_report = "table";
  int ch_max = 8;
  std::vector<std::string> ch_regular;
  cheeger->add_option("--graph", ch_graph);
  cheeger->add_option("--max-size", ch_max, "Largest subset in the exhaustive search");
  cheeger->add_option("--regular", ch_regular, "Closed forms for (p, q)")->expected(2);
  cheeger->add_option("--report", ch_report)->check(CLI::IsMember({"json", "table"}));

  // growth
  auto* growth = app.add_subcommand("growth", "Sphere sizes and growth polynomials");
  int gr_p = 3, gr_q = 7, gr_n = 20;
  std::string gr_emit = "table";
  growth->add_option("--p", gr_p);
  growth->add_option("--q", gr_q);
  growth->add_option("--n", gr_n);
  growth->add_option("--emit", gr_emit)->check(CLI::IsMember({"csv", "json", "table"}));
  auto* roots = growth->add_subcommand("roots", "Roots, Salem check and Mahler measure of g_{p,q}");
  int rt_p = 3, rt_q = 7;
  roots->add_option("--p", rt_p);
  roots->add_option("--q", rt_q);

  // spectral
  auto* spectral = app.add_subcommand("spectral", "Spectral bounds and Dirichlet eigenvalue");
  std::string sp_graph;
  spectral->add_option("--graph", sp_graph)->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the full property suite");
  Json config = Json::object();
  struct IntOption {
    const char* flag;
    const char* key;
    std::optional<long long> value;
  };
  std::vector<IntOption> verify_options = {
      {"--p-min", "p_min", {}},         {"--p-max", "p_max", {}},
      {"--q-min", "q_min", {}},         {"--q-max", "q_max", {}},
      {"--radius", "radius", {}},       {"--brute-radius", "brute_radius", {}},
      {"--brute-max-size", "brute_max_size", {}}, {"--subsets", "subsets", {}},
      {"--series-terms", "series_terms", {}},     {"--comparison-terms", "comparison_terms", {}},
      {"--seed", "seed", {}},           {"--budget", "budget", {}}};
  for (auto& opt : verify_options) verify->add_option(opt.flag, opt.value);
  std::string verify_out;
  verify->add_option("--out", verify_out, "Also write the JSON report to this file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      cg_graph* raw = nullptr;
      if (gen_tree) {
        check(cg_generate_tree(*gen_tree, gen_radius, &raw));
      } else {
        if (!gen_p) throw CliError{CG_INVALID_INPUT, "give --p and --q, or --tree"};
        check(cg_generate_tessellation(*gen_p, parse_degree(gen_q), gen_radius, &raw));
      }
      GraphPtr g(raw, cg_graph_free);
      if (gen_out.empty()) {
        char* text = nullptr;
        check(cg_graph_to_json(g.get(), &text));
        std::cout << take(text) << '\n';
      } else {
        check(cg_graph_save(g.get(), gen_out.c_str()));
        char* text = nullptr;
        check(cg_report_graph(g.get(), &text));
        show(take(text), json);
      }
    } else if (*curv) {
      const auto g = load(curv_graph);
      char* text = nullptr;
      check(cg_report_curvature(g.get(), &text));
      show(take(text), json || curv_report == "json");
    } else if (*cheeger) {
      char* text = nullptr;
      if (!ch_regular.empty()) {
        check(cg_report_cheeger_regular(parse_degree(ch_regular[0]), parse_degree(ch_regular[1]), &text));
      } else {
        if (ch_graph.empty()) throw CliError{CG_INVALID_INPUT, "give --graph or --regular P Q"};
        const auto g = load(ch_graph);
        check(cg_report_cheeger(g.get(), ch_max, &text));
      }
      show(take(text), json || ch_report == "json");
    } else if (*growth) {
      char* text = nullptr;
      if (*roots) {
        check(cg_report_roots(rt_p, rt_q, &text));
        show(take(text), json);
      } else if (gr_emit == "csv") {
        check(cg_report_growth_csv(gr_p, gr_q, gr_n, &text));
        std::cout << take(text);
      } else {
        check(cg_report_growth(gr_p, gr_q, gr_n, &text));
        show(take(text), json || gr_emit == "json");
      }
    } else if (*spectral) {
      const auto g = load(sp_graph);
      char* text = nullptr;
      check(cg_report_spectral(g.get(), &text));
      show(take(text), json);
    } else if (*verify) {
      for (const auto& opt : verify_options)
        if (opt.value) config[opt.key] = *opt.value;
      char* text = nullptr;
      int all_pass = 0;
      check(cg_verify_all(config.dump().c_str(), &text, &all_pass));
      const std::string report = take(text);
      if (!verify_out.empty()) {
        std::ofstream file(verify_out);
        file << Json::parse(report).dump(2) << '\n';
        if (!file) throw CliError{CG_IO, "cannot write " + verify_out};
      }
      if (json) {
        std::cout << Json::parse(report).dump(2) << '\n';
      } else {
        const Json doc = Json::parse(report);
        Json rows = Json::array();
        for (const auto& c : doc["checks"])
          rows.push_back({{"key", c["key"]}, {"pass", c["pass"]}, {"detail", c["detail"]}});
        render_table(rows, std::cout);
        std::cout << "passed: " << doc["passed"] << "  failed: " << doc["failed"]
                  << "  partial: " << doc["partial"] << '\n';
      }
      return all_pass ? 0 : 1;
    }
  } catch (const CliError& e) {
    std::cerr << "error [" << cg_status_name(e.status) << "]: " << e.message << '\n';
    return 2;
  }
  return 0;
}
