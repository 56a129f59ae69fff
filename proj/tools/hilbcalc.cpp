// hilbcalc: Hilbert coefficients, superficial sequences and depth of graded
// quotients of polynomial rings over Q.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hilbcalc/oracle.hpp"
#include "hilbcalc/runner.hpp"

namespace {

using namespace hilbcalc;

struct OutputOptions {
  bool json = false;
  bool quiet = false;
};

void add_run_options(CLI::App* cmd, RunOptions& run, OutputOptions& out) {
  cmd->add_option("--seed", run.seed, "Seed for every randomized search")->envname("HILBCALC_SEED");
  cmd->add_option("--trials", run.trials, "Candidates tried per search step")->check(CLI::PositiveNumber);
  cmd->add_option("--max-degree", run.max_degree, "Truncation degree of series expansions");
  cmd->add_flag("--json", out.json, "Emit the JSON report on standard output");
  cmd->add_flag("--quiet", out.quiet, "Only print failures and the status line");
  cmd->add_flag("--timing", run.timing, "Include elapsed time in the report");
}

int emit(const RunReport& report, const OutputOptions& out) {
  if (out.json) {
    std::cout << report.to_json().dump(2) << '\n';
    if (report.input_error) std::cerr << "error: " << *report.input_error << '\n';
  } else if (report.input_error) {
    std::cerr << "error: " << *report.input_error << '\n';
  } else {
    std::cout << report.to_text(out.quiet);
  }
  return static_cast<int>(report.exit_code());
}

RunReport input_error(const std::string& source, const RunOptions& run, const std::string& message) {
  RunReport r;
  r.source = source;
  r.options = run;
  r.input_error = message;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients of graded modules and their quotients by linear forms"};
  app.require_subcommand(1);

  RunOptions run;
  OutputOptions out;

  std::string script_path;
  auto* run_cmd = app.add_subcommand("run", "Execute a script");
  run_cmd->add_option("script", script_path, "Script file")->required();
  add_run_options(run_cmd, run, out);

  auto* examples_cmd = app.add_subcommand("paper-examples", "Run the built-in example suites");
  add_run_options(examples_cmd, run, out);

  OneShotInput input;
  std::size_t index = 0;
  std::size_t oracle_degree = kDefaultOracleDegree;
  struct OneShot {
    const char* name;
    const char* help;
    dsl::CommandKind kind;
    bool forms;
  };
  const OneShot one_shots[] = {
      {"series", "Hilbert series of R/I(-shift)", dsl::CommandKind::kSeries, false},
      {"coeffs", "Hilbert coefficients e_0..e_D", dsl::CommandKind::kCoeffs, false},
      {"depth", "Depth with a chain of regular linear forms", dsl::CommandKind::kDepth, false},
      {"superficial", "Superficiality of each form on the successive quotients", dsl::CommandKind::kSuperficial,
       true},
      {"admissible", "Certify a superficial sequence generating the forms", dsl::CommandKind::kAdmissible, true},
      {"verify", "Check the sign of e_i(M) - e_i(M/(forms)M) and its depth criterion", dsl::CommandKind::kVerify,
       true},
      {"oracle-check", "Compare the series with brute-force graded dimensions", dsl::CommandKind::kOracle, false},
  };
  std::vector<std::pair<CLI::App*, const OneShot*>> one_shot_cmds;
  for (const auto& shot : one_shots) {
    auto* cmd = app.add_subcommand(shot.name, shot.help);
    cmd->add_option("--ring", input.ring, "Variables, e.g. \"x1 x2 y1\"")->required();
    cmd->add_option("--ideal", input.ideal, "Generators, e.g. \"x1*y1, x2*y1\"");
    cmd->add_option("--shift", input.shift, "Degree shift r of R/I(-r)");
    if (shot.forms) {
      cmd->add_option("--forms", input.forms, "Linear forms, e.g. \"y1 - x1\"")->required();
    }
    if (shot.kind == dsl::CommandKind::kVerify) cmd->add_option("--i", index, "Coefficient index i")->required();
    if (shot.kind == dsl::CommandKind::kOracle) cmd->add_option("--degree", oracle_degree, "Largest degree checked");
    add_run_options(cmd, run, out);
    one_shot_cmds.emplace_back(cmd, &shot);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(ExitCode::kInputError);
  }

  if (run_cmd->parsed()) {
    std::ifstream in(script_path);
    if (!in) return emit(input_error(script_path, run, "cannot read " + script_path), out);
    std::stringstream text;
    text << in.rdbuf();
    return emit(run_source(text.str(), script_path, run), out);
  }
  if (examples_cmd->parsed()) return emit(paper_examples(run), out);

  for (const auto& [cmd, shot] : one_shot_cmds) {
    if (!cmd->parsed()) continue;
    const std::size_t value = shot->kind == dsl::CommandKind::kVerify   ? index
                              : shot->kind == dsl::CommandKind::kOracle ? oracle_degree
                                                                        : 0;
    dsl::Script script;
    try {
      script = one_shot_script(input, shot->kind, value);
    } catch (const std::exception& e) {
      return emit(input_error(shot->name, run, e.what()), out);
    }
    return emit(run_script(script, shot->name, run), out);
  }
  return static_cast<int>(ExitCode::kInputError);
}
