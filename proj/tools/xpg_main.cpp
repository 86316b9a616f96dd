#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "xpg/catalog.hpp"
#include "xpg/emit.hpp"
#include "xpg/expr.hpp"
#include "xpg/power_graph.hpp"
#include "xpg/verify.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t a = item.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = item.find_last_not_of(" \t");
    item = item.substr(a, b - a + 1);
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string(what) + ": '" + item + "' is not an integer");
    }
  }
  return out;
}

xpg::ExclusionSet parse_exclude(const std::string& text) {
  return xpg::ExclusionSet(parse_int_list(text, "--exclude"));
}

std::vector<int> parse_primes(const std::string& text) {
  auto primes = parse_int_list(text, "--primes");
  for (int p : primes)
    if (!xpg::is_prime(p))
      throw std::invalid_argument("--primes: " + std::to_string(p) + " is not prime");
  return primes;
}

std::vector<std::string> collect_fixture_files(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".tbl")
      files.push_back(entry.path().string());
  std::sort(files.begin(), files.end());
  return files;
}

void write_output(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power graphs of finite groups: construction, quotients, verification"};
  app.require_subcommand(1);

  std::string expr_text, exclude_text, format = "dot", out_path;
  bool want_undirected = false, want_directed = false;

  auto* build = app.add_subcommand("build", "emit a power graph of a group");
  build->add_option("expr", expr_text, "group expression, e.g. \"Z3 x Z4\"")->required();
  build->add_option("--exclude", exclude_text, "comma-separated integers >= 2 ('' for none)");
  build->add_flag("--directed", want_directed, "directed graph (default)");
  build->add_flag("--undirected", want_undirected, "undirected graph");
  build->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}));
  build->add_option("--out", out_path, "output file (default stdout)");

  auto* quot = app.add_subcommand("quotient", "emit the labeled quotient power graph");
  quot->add_option("expr", expr_text, "group expression")->required();
  quot->add_option("--exclude", exclude_text, "comma-separated integers >= 2 ('' for none)");
  quot->add_option("--format", format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  quot->add_option("--out", out_path, "output file (default stdout)");

  int max_order = 60;
  std::string primes_text = "2,3,5", fixtures_dir, report_format = "text";
  auto* verify = app.add_subcommand("verify", "check every claim over the group catalog");
  verify->add_option("--max-order", max_order, "catalog order bound (default 60)");
  verify->add_option("--primes", primes_text, "primes to draw exclusions from (default 2,3,5)");
  verify->add_option("--fixtures", fixtures_dir, "directory of extra .tbl Cayley tables");
  verify->add_option("--format", report_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", out_path, "output file (default stdout)");

  auto* cat = app.add_subcommand("catalog", "list the catalog entries");
  cat->add_option("--max-order", max_order, "catalog order bound (default 60)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) {
      if (want_directed && want_undirected)
        throw std::invalid_argument("choose one of --directed / --undirected");
      bool directed = !want_undirected;
      auto ast = xpg::parse_group(expr_text);
      auto group = xpg::evaluate(ast);
      auto x = parse_exclude(exclude_text);
      auto graph = directed ? xpg::directed_power_graph(group, x)
                            : xpg::undirected_power_graph(group, x);
      std::string title = xpg::render(ast) + " | " +
                          (directed ? "directed" : "undirected") + " | exclude " + x.to_string();
      if (format == "dot")
        write_output(out_path, xpg::to_dot(graph, group.names(), title));
      else
        write_output(out_path, xpg::to_json_graph(graph, group.names(), directed).dump(2) + "\n");
    } else if (quot->parsed()) {
      auto ast = xpg::parse_group(expr_text);
      auto group = xpg::evaluate(ast);
      auto x = parse_exclude(exclude_text);
      auto q = xpg::excluded_quotient(xpg::quotient_power_graph(group), x);
      auto names = xpg::subgroup_names(group);
      std::string title = xpg::render(ast) + " | quotient | exclude " + x.to_string();
      if (format == "dot")
        write_output(out_path, xpg::to_dot(q, names, title));
      else
        write_output(out_path, xpg::to_json_graph(q, names).dump(2) + "\n");
    } else if (verify->parsed()) {
      xpg::RunOptions opt;
      opt.max_order = max_order;
      opt.primes = parse_primes(primes_text);
      if (!fixtures_dir.empty()) opt.fixture_files = collect_fixture_files(fixtures_dir);
      auto result = xpg::run_catalog(opt);
      std::ostringstream os;
      if (report_format == "json") {
        nlohmann::json doc;
        auto reports = nlohmann::json::array();
        for (const auto& r : result.reports) reports.push_back(xpg::to_json(r));
        doc["reports"] = std::move(reports);
        doc["summary"] = {{"pass", result.summary.pass},
                          {"counterexample", result.summary.counterexample},
                          {"notApplicable", result.summary.not_applicable},
                          {"resourceExhausted", result.summary.resource_exhausted}};
        os << doc.dump(2) << "\n";
      } else {
        for (const auto& r : result.reports) os << xpg::to_line(r) << "\n";
        os << "summary: pass=" << result.summary.pass
           << " counterexample=" << result.summary.counterexample
           << " not-applicable=" << result.summary.not_applicable
           << " resource-exhausted=" << result.summary.resource_exhausted << "\n";
      }
      write_output(out_path, os.str());
      return result.summary.counterexample == 0 && result.summary.resource_exhausted == 0 ? 0
                                                                                          : 2;
    } else if (cat->parsed()) {
      std::ostringstream os;
      for (const auto& entry : xpg::make_catalog({max_order})) {
        os << std::setw(5) << entry.group.order() << "  " << entry.description << "\n";
      }
      write_output(out_path, os.str());
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
