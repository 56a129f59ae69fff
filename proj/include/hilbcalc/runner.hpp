#pragma once

// Executes scripts and the built-in example suites, and renders the results
// as text or as a JSON report (schema "hilbcalc-report/1").

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hilbcalc/depth.hpp"
#include "hilbcalc/dsl.hpp"
#include "hilbcalc/theorem.hpp"

namespace hilbcalc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportSchema = "hilbcalc-report/1";

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  std::size_t max_degree = kDefaultExpansionDegree;
  /// Adds elapsed time to the JSON report, which then stops being reproducible.
  bool timing = false;
};

enum class ExitCode : int { kOk = 0, kVerificationFailed = 1, kInputError = 2 };

struct CommandResult {
  std::string command;  // series, coeffs, ..., or suite
  std::string label;    // e.g. "verify M F i=1" or "two-prime-product r=1 s=2"
  std::optional<dsl::SourcePos> pos;
  /// Queries are always ok unless they throw; verifications can fail.
  bool ok = true;
  Json data;
  std::vector<std::string> lines;  // human rendering
};

struct RunReport {
  std::string source;
  RunOptions options;
  std::vector<CommandResult> results;
  /// Parse, semantic or option error; no results are produced.
  std::optional<std::string> input_error;
  double elapsed_seconds = 0;

  ExitCode exit_code() const;
  Json to_json() const;
  std::string to_text(bool quiet = false) const;
};

/// Runs every command of a validated script in order.
RunReport run_script(const dsl::Script& script, const std::string& source, const RunOptions& options);

/// Tokenizes, parses and runs; DSL errors become an input error.
RunReport run_source(std::string_view text, const std::string& source, const RunOptions& options);

/// Closed-form families (r, k, l <= 8, m <= 6, d = 6), R/mp for
/// 0 < s < d <= 6 and R/pq for 0 < r < s <= 5, each with the parity
/// verification at every legal i. A max_degree below the largest numerator
/// degree among these modules is reported as an input error.
RunReport paper_examples(const RunOptions& options);

/// Script with a single module M = R/I (shifted), optional forms F and one
/// command, built from literal strings in the DSL syntax.
struct OneShotInput {
  std::string ring;
  std::string ideal;
  std::size_t shift = 0;
  std::optional<std::string> forms;
};
dsl::Script one_shot_script(const OneShotInput& input, dsl::CommandKind kind, std::size_t value = 0);

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json integer_json(const Integer& v);

}  // namespace hilbcalc
