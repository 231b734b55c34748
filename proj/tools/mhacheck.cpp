#include "mha/scenario.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string load(const std::string& ref) {
  constexpr std::string_view prefix = "scenario:";
  if (ref.rfind(prefix, 0) == 0) {
    auto body = mha::builtin_scenario(std::string_view(ref).substr(prefix.size()));
    if (!body) throw mha::ReferenceError("no bundled scenario '" + ref + "'");
    return *body;
  }
  std::ifstream in(ref);
  if (!in) throw mha::ReferenceError("cannot open scenario file '" + ref + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"mhacheck: exact checks for multiplier Hopf algebras and partial (co)actions"};
  app.require_subcommand(1);

  std::string ref;
  std::string out_path;
  std::string format = "machine";
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> window;
  auto* run = app.add_subcommand("run", "Run a scenario file or a bundled scenario (scenario:<name>)");
  run->add_option("scenario", ref, "Path or scenario:<name>")->required();
  run->add_option("--window", window, "Window radius for infinite groups (overrides the scenario)");
  run->add_option("--seed", seed, "Seed for sampled checks (overrides the scenario)");
  run->add_option("--out", out_path, "Write the report here instead of stdout");
  run->add_option("--format", format, "Report format")->check(CLI::IsMember({"machine", "human"}));

  auto* list = app.add_subcommand("list", "List built-in groups, instances, algebras, checks and scenarios");

  std::string kind;
  auto* explain = app.add_subcommand("explain", "Describe a check kind");
  explain->add_option("check", kind, "Check kind")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : mha::kExitParse;
  }

  try {
    if (*list) {
      for (const auto& line : mha::builtin_catalog()) std::cout << line << '\n';
      return 0;
    }
    if (*explain) {
      std::cout << mha::explain_check(kind);
      return 0;
    }
    mha::RunOptions opts;
    opts.seed = seed;
    opts.window = window;
    auto res = mha::run_scenario(load(ref), opts);
    std::string text = format == "machine" ? res.report.dump(2) + "\n" : res.text;
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return mha::kExitReference;
      }
      out << text;
      std::cout << res.report["scenario"].get<std::string>() << ": " << mha::outcome_name(res.outcome) << '\n';
    }
    return mha::exit_code(res.outcome);
  } catch (const mha::ScenarioParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return mha::kExitParse;
  } catch (const mha::ReferenceError& e) {
    std::cerr << "unresolved reference: " << e.what() << '\n';
    return mha::kExitReference;
  }
}
