#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "monodromy/errors.hpp"
#include "monodromy/perm_group.hpp"
#include "monodromy/report.hpp"

namespace {

using monodromy::Report;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw monodromy::ParseError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

nlohmann::json parse_json_input(const std::string& path) {
  const std::string text = read_input(path);
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw monodromy::ParseError(std::string("invalid JSON input: ") + e.what());
  }
}

std::size_t group_bound_from_env() {
  const char* raw = std::getenv("MONODROMY_GROUP_BOUND");
  if (raw == nullptr) return monodromy::kDefaultGroupBound;
  try {
    const long long value = std::stoll(raw);
    if (value < 1) throw monodromy::ParseError("MONODROMY_GROUP_BOUND must be positive");
    return static_cast<std::size_t>(value);
  } catch (const monodromy::ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw monodromy::ParseError("MONODROMY_GROUP_BOUND is not an integer");
  }
}

void emit(const Report& report, bool compact) {
  const nlohmann::json j = report.to_json();
  if (compact)
    std::cout << j.dump() << "\n";
  else
    std::cout << j.dump(2) << "\n";
}

int fail(int code, const std::string& kind, const std::string& message) {
  std::cerr << "error (" << kind << "): " << message << "\n";
  nlohmann::json j;
  j["error"] = {{"type", kind}, {"message", message}};
  std::cout << j.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"monodromy: invariants of branched covers of the 2-sphere"};
  app.require_subcommand(1);
  app.fallthrough();
  bool compact_json = true;
  app.add_flag("--json,!--no-json", compact_json,
               "compact machine JSON on stdout (default on; off pretty-prints)");

  std::string input_path = "-";
  int inner_degree = 2, outer_degree = 2;
  int n_max = 4, k_max = 4, tower_n_max = 3;
  bool override_budget = false;

  CLI::App* invariants = app.add_subcommand("invariants", "invariants of one branch datum");
  invariants->add_option("--input", input_path, "branch data JSON file or - for stdin");

  CLI::App* theorem1 = app.add_subcommand("theorem1", "composite winding cover pipeline");
  theorem1->add_option("inner", inner_degree, "inner winding degree")->required();
  theorem1->add_option("outer", outer_degree, "outer winding degree")->required();

  CLI::App* sweep = app.add_subcommand("sweep", "exhaustive enumeration checks");
  sweep->add_option("--n-max", n_max, "maximum cover degree");
  sweep->add_option("--k-max", k_max, "maximum branch value count");
  sweep->add_flag("--override-budget", override_budget, "allow n_max above 5");

  CLI::App* tower = app.add_subcommand("tower-search", "boundary-map profile search");
  tower->add_option("--n-max", tower_n_max, "maximum cover degree");

  CLI::App* homology_cmd = app.add_subcommand("homology", "integral homology of a complex");
  homology_cmd->add_option("--input", input_path, "complex JSON file or - for stdin");

  CLI::App* suspend_cmd = app.add_subcommand("suspend", "suspension of a complex");
  suspend_cmd->add_option("--input", input_path, "complex JSON file or - for stdin");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }

  try {
    const std::size_t bound = group_bound_from_env();
    Report report;
    if (invariants->parsed())
      report = monodromy::cmd_invariants(parse_json_input(input_path), bound);
    else if (theorem1->parsed())
      report = monodromy::cmd_theorem1(inner_degree, outer_degree, bound);
    else if (sweep->parsed())
      report = monodromy::cmd_sweep(n_max, k_max, override_budget, bound);
    else if (tower->parsed())
      report = monodromy::cmd_tower_search(tower_n_max, bound);
    else if (homology_cmd->parsed())
      report = monodromy::cmd_homology(parse_json_input(input_path));
    else if (suspend_cmd->parsed())
      report = monodromy::cmd_suspend(parse_json_input(input_path));
    emit(report, compact_json);
    return 0;
  } catch (const monodromy::ParseError& e) {
    return fail(1, "parse", e.what());
  } catch (const monodromy::ValidationError& e) {
    return fail(2, "validation", e.what());
  } catch (const monodromy::InternalError& e) {
    return fail(3, "internal", e.what());
  } catch (const std::exception& e) {
    return fail(3, "internal", e.what());
  }
}
