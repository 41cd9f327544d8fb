#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "basekit/error.hpp"
#include "basekit/report.hpp"
#include "basekit/suites.hpp"

namespace {

enum Exit { kPass = 0, kFailure = 1, kUsage = 2, kBudget = 3 };

using nlohmann::json;
using namespace basekit;

json read_document(const std::string& source) {
  std::stringstream text;
  if (source == "-") {
    text << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw DomainError("cannot open " + source);
    text << in.rdbuf();
  }
  try {
    return json::parse(text.str());
  } catch (const json::parse_error& e) {
    throw DomainError(source + ": " + e.what());
  }
}

SearchMode parse_mode(const std::string& m) {
  if (m == "pruned") return SearchMode::Pruned;
  if (m == "exhaustive") return SearchMode::Exhaustive;
  throw DomainError("unknown mode \"" + m + "\" (pruned or exhaustive)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Base sizes of permutation groups"};
  app.require_subcommand(1);

  std::string spec_source;
  std::string mode = "pruned";
  std::uint64_t budget = 100'000'000;
  bool table = false;
  bool witnesses = false;
  bool wall_time = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report base statistics of a group spec");
  analyze_cmd->add_option("spec", spec_source, "Group spec JSON file, or - for stdin")->required();
  analyze_cmd->add_flag("--table", table, "Human-readable table instead of JSON");
  analyze_cmd->add_flag("--witnesses", witnesses, "One witness base per size");
  analyze_cmd->add_option("--mode", mode, "pruned or exhaustive")->capture_default_str();
  analyze_cmd->add_option("--budget", budget, "Search node ceiling")->capture_default_str();
  analyze_cmd->add_flag("--wall-time", wall_time, "Include wall-clock time in the report");

  std::string suite;
  bool slow = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a named verification suite");
  verify_cmd->add_option("suite", suite, "Suite name")->required();
  verify_cmd->add_flag("--slow", slow, "Include the long-running checks");
  verify_cmd->add_flag("--table", table, "Human-readable lines instead of JSON");
  verify_cmd->add_option("--budget", budget, "Search node ceiling")->capture_default_str();

  std::string first_source;
  std::string second_source;
  auto* probe_cmd = app.add_subcommand("probe-epsilon", "Measure epsilon for a product action");
  probe_cmd->add_option("first", first_source, "First factor spec")->required();
  probe_cmd->add_option("second", second_source, "Second factor spec")->required();
  probe_cmd->add_option("--budget", budget, "Search node ceiling")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*analyze_cmd) {
      AnalyzeOptions options;
      options.search = {parse_mode(mode), budget, witnesses};
      options.wall_time = wall_time;
      const json report = analyze(read_document(spec_source), options);
      if (table)
        std::cout << render_table(report);
      else
        std::cout << report.dump(2) << '\n';
      return report.at("anomalies").empty() ? kPass : kFailure;
    }
    if (*verify_cmd) {
      const auto& names = suite_names();
      if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::cerr << "unknown suite \"" << suite << "\"; available:";
        for (const auto& n : names) std::cerr << ' ' << n;
        std::cerr << '\n';
        return kUsage;
      }
      const SuiteResult result = run_suite(suite, {slow, budget});
      if (table)
        std::cout << render_table(result);
      else
        std::cout << to_json(result).dump(2) << '\n';
      return result.passed() ? kPass : kFailure;
    }
    if (*probe_cmd) {
      const json out = probe_epsilon(read_document(first_source), read_document(second_source),
                                     {SearchMode::Pruned, budget, false});
      std::cout << out.dump(2) << '\n';
      return out.contains("anomaly") ? kFailure : kPass;
    }
  } catch (const BudgetExceeded& e) {
    std::cout << json{{"budget", {{"limit", budget}, {"exceeded", true}}}, {"error", e.what()}}.dump(2)
              << '\n';
    std::cerr << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
