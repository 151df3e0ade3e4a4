#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace mckay {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr const char* kToolVersion = "1.0.0";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string suite = "all";
  std::string type;  // tits / clifford-b: "B" (default) or "A"
  std::optional<uint32_t> rank, d, q, m, table, row, max_rank;
  std::string case_name;  // crg: "e7-d4", "tables", "groups"
  uint32_t threads = 1;
  uint64_t seed = 1;
};

struct CheckResult {
  std::string id;
  nlohmann::json params = nlohmann::json::object();
  std::string status;  // pass, fail, skipped
  nlohmann::json witness;
  std::string reason;  // skipped only
  double elapsed_ms = 0;
};

// one unit of work; may yield several checks that share expensive setup
struct Task {
  std::string key;
  std::function<std::vector<CheckResult>()> run;
};

struct Report {
  Options options;
  std::vector<CheckResult> checks;
  size_t pass = 0, fail = 0, skipped = 0;
};

const std::vector<std::string>& suite_names();
// throws UsageError for unknown suites or parameters no check can use
std::vector<Task> plan(const Options& o);
// tasks run on a work queue; results keep the plan order
Report run(const Options& o);

nlohmann::json to_json(const Report& r, bool with_timing = true);
std::string to_markdown(const Report& r);

}  // namespace mckay
