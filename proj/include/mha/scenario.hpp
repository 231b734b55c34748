#ifndef MHA_SCENARIO_HPP
#define MHA_SCENARIO_HPP

#include "mha/errors.hpp"
#include "mha/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mha {

inline constexpr int kScenarioSchema = 1;

// Exit codes of the runner.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInconclusive = 2;
inline constexpr int kExitParse = 3;
inline constexpr int kExitReference = 4;

// Malformed scenario text or a field of the wrong shape.
class ScenarioParseError : public Error {
 public:
  using Error::Error;
};

// A name (group, instance, algebra, idempotent, check kind, mutation) that
// does not resolve.
class ReferenceError : public Error {
 public:
  using Error::Error;
};

struct RunOptions {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> window;
};

struct RunResult {
  nlohmann::ordered_json report;
  Outcome outcome = Outcome::pass;
  std::string text;
};

int exit_code(Outcome o);

// Throws ScenarioParseError or ReferenceError before any check runs.
RunResult run_scenario(std::string_view text, const RunOptions& opts = {});

// Bundled scenario files, embedded at build time, sorted by name.
const std::vector<std::pair<std::string, std::string>>& builtin_scenarios();
std::optional<std::string> builtin_scenario(std::string_view name);

// Groups, instances, algebras, check kinds and scenarios, one per line in a
// fixed order.
std::vector<std::string> builtin_catalog();
// Description and parameters of a check kind; throws ReferenceError.
std::string explain_check(std::string_view kind);

} // namespace mha

#endif // MHA_SCENARIO_HPP
