#include "hilbcalc/runner.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "hilbcalc/oracle.hpp"

namespace hilbcalc {

Json integer_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) return Json(v.get_si());
  return Json(v.get_str());
}

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

template <class Seq>
std::string join_integers(const Seq& values) {
  std::vector<std::string> parts;
  for (const auto& v : values) parts.push_back(Integer(v).get_str());
  return join(parts, ", ");
}

Json integers_json(const std::vector<Integer>& values) {
  Json a = Json::array();
  for (const auto& v : values) a.push_back(integer_json(v));
  return a;
}

std::vector<std::string> form_strings(const std::vector<LinearForm>& forms, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (const auto& f : forms) out.push_back(f.to_string(names));
  return out;
}

Json dimension_json(const Dimension& d) {
  if (d.is_minus_infinity()) return Json("-inf");
  return Json(d.value());
}

Json series_json(const HilbertSeries& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim;
  j["numerator"] = integers_json(s.numerator.coefficients());
  j["text"] = s.to_string();
  const HilbertSeries r = s.reduced();
  j["reduced"] = {{"ambient_dim", r.ambient_dim}, {"numerator", integers_json(r.numerator.coefficients())}};
  return j;
}

Json table_json(const CoefficientTable& t) {
  return Json{{"dimension", dimension_json(t.dim)}, {"e", integers_json(t.coeffs)}};
}

Json superficiality_json(const SuperficialityReport& r) {
  Json j;
  j["superficial"] = r.is_superficial;
  j["socle_length"] = r.socle_length ? integer_json(*r.socle_length) : Json(nullptr);
  j["regular"] = r.colon_equal;
  return j;
}

Json admissibility_json(const AdmissibilityCertificate& c, const std::vector<std::string>& names) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["witness"] = c.witness ? Json(form_strings(*c.witness, names)) : Json(nullptr);
  Json steps = Json::array();
  for (const auto& s : c.steps) steps.push_back(superficiality_json(s));
  j["steps"] = std::move(steps);
  j["trials_used"] = c.trials_used;
  j["seed"] = c.seed;
  return j;
}

Json depth_json(const DepthCertificate& c, const std::vector<std::string>& names) {
  Json j;
  j["depth"] = c.depth;
  j["chain"] = form_strings(c.chain, names);
  j["stop"] = to_string(c.stop);
  j["probabilistic"] = c.probabilistic();
  j["failed_trials"] = c.failed_trials;
  j["seed"] = c.seed;
  return j;
}

Json parity_json(const QuotientParityReport& r, const std::vector<std::string>& names) {
  Json j;
  j["i"] = r.i;
  j["s"] = r.s;
  j["e_M"] = integer_json(r.e_M);
  j["e_Q"] = integer_json(r.e_Q);
  j["parity_ok"] = r.parity_ok;
  j["equality"] = r.equality;
  j["depth_value"] = r.depth_value;
  j["depth_probabilistic"] = r.depth_probabilistic;
  j["equivalence"] = to_string(r.equivalence);
  j["equivalence_ok"] = r.equivalence_ok;
  j["defect_lengths"] = integers_json(r.defect_lengths);
  j["chain_coefficients"] = integers_json(r.chain_coefficients);
  j["intermediate_ok"] = r.intermediate_ok;
  j["telescoping_ok"] = r.telescoping_ok;
  j["passed"] = r.passed();
  j["admissibility"] = admissibility_json(r.admissibility, names);
  j["depth"] = depth_json(r.depth, names);
  return j;
}

std::vector<std::string> parity_lines(const QuotientParityReport& r) {
  const bool even = r.i % 2 == 0;
  std::vector<std::string> out;
  out.push_back("  e_" + std::to_string(r.i) + "(M) = " + r.e_M.get_str() + ", e_" + std::to_string(r.i) +
                "(Q) = " + r.e_Q.get_str() + "; parity (" + (even ? "<=" : ">=") + ") " +
                (r.parity_ok ? "ok" : "VIOLATED"));
  out.push_back("  equality " + std::string(r.equality ? "yes" : "no") + ", depth " +
                std::to_string(r.depth_value) + (r.depth_probabilistic ? " (probabilistic)" : "") +
                (r.depth_value >= r.s - r.i ? " >= " : " < ") + std::to_string(r.s - r.i) + ", equivalence " +
                to_string(r.equivalence));
  out.push_back("  chain e_" + std::to_string(r.i) + ": " + join_integers(r.chain_coefficients) +
                "; defect lengths: " + join_integers(r.defect_lengths) + "; telescoping " +
                (r.intermediate_ok && r.telescoping_ok ? "ok" : "FAILED"));
  return out;
}

// ---------------------------------------------------------------------------
// Script execution

class Executor {
 public:
  Executor(const dsl::Script& script, const RunOptions& options) : script_(script), opts_(options) {}

  CommandResult run(const dsl::Command& c, std::optional<dsl::SourcePos> pos) {
    CommandResult r;
    r.command = to_string(c.kind);
    r.label = r.command + " " + c.module;
    if (!c.forms.empty()) r.label += " " + c.forms;
    if (c.kind == dsl::CommandKind::kVerify) r.label += " i=" + std::to_string(c.value);
    if (c.kind == dsl::CommandKind::kOracle) r.label += " " + std::to_string(c.value);
    r.pos = pos;
    r.data["module"] = c.module;
    if (!c.forms.empty()) r.data["forms"] = c.forms;
    try {
      const CyclicModule& m = module(c.module);
      switch (c.kind) {
        case dsl::CommandKind::kSeries:
          series(r, m);
          break;
        case dsl::CommandKind::kCoeffs:
          coeffs(r, m);
          break;
        case dsl::CommandKind::kDepth:
          depth_of(r, m);
          break;
        case dsl::CommandKind::kSuperficial:
          superficial(r, m, script_.forms(c.forms).forms);
          break;
        case dsl::CommandKind::kAdmissible:
          admissible(r, m, script_.forms(c.forms).forms);
          break;
        case dsl::CommandKind::kVerify:
          verify(r, m, script_.forms(c.forms).forms, c.value);
          break;
        case dsl::CommandKind::kOracle:
          oracle(r, m, c.value);
          break;
      }
    } catch (const std::exception& e) {
      r.ok = false;
      r.data["error"] = e.what();
      r.lines.push_back("  error: " + std::string(e.what()));
    }
    r.data["ok"] = r.ok;
    return r;
  }

 private:
  const std::vector<std::string>& names() const { return script_.variables; }

  const CyclicModule& module(const std::string& name) {
    auto it = modules_.find(name);
    if (it != modules_.end()) return it->second;
    const dsl::ModuleDecl& decl = script_.module(name);
    CyclicModule m(PolyIdeal(script_.ring_dim(), script_.ideal(decl.ideal).generators), decl.shift);
    return modules_.emplace(name, std::move(m)).first->second;
  }

  void series(CommandResult& r, const CyclicModule& m) {
    const HilbertSeries s = series_of_cyclic(m);
    const std::vector<Integer> expansion = s.expand(opts_.max_degree);
    r.data["series"] = series_json(s);
    r.data["dimension"] = dimension_json(series_dimension(s));
    r.data["expansion"] = integers_json(expansion);
    r.lines.push_back("  P(t) = " + s.to_string() + ", dim " + series_dimension(s).to_string());
    r.lines.push_back("  l([M]_n), n = 0.." + std::to_string(opts_.max_degree) + ": " + join_integers(expansion));
  }

  void coeffs(CommandResult& r, const CyclicModule& m) {
    const HilbertSeries s = series_of_cyclic(m);
    const CoefficientTable t = hilbert_coefficients(s);
    r.data["coefficients"] = table_json(t);
    if (!s.is_zero()) r.data["phi"] = integers_json(phi(s).coefficients());
    r.lines.push_back("  dim " + t.dim.to_string() + ", e = (" + join_integers(t.coeffs) + ")");
  }

  void depth_of(CommandResult& r, const CyclicModule& m) {
    const DepthCertificate c = depth(m, opts_.seed, opts_.trials);
    r.data["depth"] = depth_json(c, names());
    r.lines.push_back("  depth " + std::to_string(c.depth) + " (" + to_string(c.stop) +
                      (c.probabilistic() ? ", probabilistic" : "") + ")");
    if (!c.chain.empty()) r.lines.push_back("  regular chain: " + join(form_strings(c.chain, names()), ", "));
  }

  void superficial(CommandResult& r, const CyclicModule& m, const std::vector<LinearForm>& forms) {
    QuotientChain chain(m);
    Json steps = Json::array();
    bool sequence = true;
    for (const auto& f : forms) {
      const LinearForm cur = chain.to_current(f);
      Json step;
      step["form"] = f.to_string(names());
      if (cur.is_zero()) {
        step["vanishes"] = true;
        sequence = false;
        r.lines.push_back("  " + f.to_string(names()) + ": vanishes on the quotient");
        steps.push_back(std::move(step));
        break;
      }
      const SuperficialityReport rep = is_superficial(chain.current(), cur);
      step.update(superficiality_json(rep));
      steps.push_back(std::move(step));
      std::string line = "  " + f.to_string(names()) + ": ";
      if (rep.is_superficial) {
        line += rep.colon_equal ? "regular" : "superficial, l(0 : g) = " + rep.socle_length->get_str();
      } else {
        line += "not superficial";
        sequence = false;
      }
      r.lines.push_back(line);
      if (!rep.is_superficial) break;
      chain = chain.quotient(f);
    }
    r.data["steps"] = std::move(steps);
    r.data["superficial_sequence"] = sequence;
  }

  void admissible(CommandResult& r, const CyclicModule& m, const std::vector<LinearForm>& forms) {
    const AdmissibilityCertificate c = find_superficial_sequence(m, forms, opts_.seed, opts_.trials);
    r.ok = c.verdict == AdmissibilityVerdict::kCertified;
    r.data["admissibility"] = admissibility_json(c, names());
    r.lines.push_back("  " + std::string(to_string(c.verdict)) + " after " + std::to_string(c.trials_used) +
                      " candidates");
    if (c.witness) r.lines.push_back("  superficial sequence: " + join(form_strings(*c.witness, names()), ", "));
  }

  void verify(CommandResult& r, const CyclicModule& m, const std::vector<LinearForm>& forms, std::size_t i) {
    try {
      const QuotientParityReport rep = verify_quotient_parity(m, forms, i, opts_.seed, opts_.trials);
      r.ok = rep.passed();
      r.data["report"] = parity_json(rep, names());
      for (auto& l : parity_lines(rep)) r.lines.push_back(std::move(l));
    } catch (const NotAdmissible& e) {
      r.ok = false;
      r.data["verdict"] = to_string(e.certificate().verdict);
      r.data["admissibility"] = admissibility_json(e.certificate(), names());
      r.lines.push_back("  not admissible: " + std::string(to_string(e.certificate().verdict)) + " after " +
                        std::to_string(e.certificate().trials_used) + " candidates");
    }
  }

  void oracle(CommandResult& r, const CyclicModule& m, std::size_t n) {
    const OracleComparison cmp = compare_with_oracle(series_of_cyclic(m), m, n);
    r.ok = cmp.agrees();
    r.data["max_degree"] = n;
    r.data["series_values"] = integers_json(cmp.claimed);
    r.data["brute_force"] = cmp.actual;
    r.data["agrees"] = cmp.agrees();
    if (cmp.first_mismatch) {
      r.data["first_mismatch"] = {{"degree", cmp.first_mismatch->degree},
                                  {"series", integer_json(cmp.first_mismatch->claimed)},
                                  {"brute_force", integer_json(cmp.first_mismatch->actual)}};
      r.lines.push_back("  MISMATCH at degree " + std::to_string(cmp.first_mismatch->degree) + ": series " +
                        cmp.first_mismatch->claimed.get_str() + ", brute force " +
                        cmp.first_mismatch->actual.get_str());
    } else {
      r.data["first_mismatch"] = nullptr;
      r.lines.push_back("  series agrees with brute force in degrees 0.." + std::to_string(n));
    }
  }

  const dsl::Script& script_;
  const RunOptions& opts_;
  std::map<std::string, CyclicModule> modules_;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

RunReport run_script(const dsl::Script& script, const std::string& source, const RunOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.source = source;
  report.options = options;
  Executor exec(script, options);
  for (std::size_t k = 0; k < script.statements.size(); ++k) {
    const auto* cmd = std::get_if<dsl::Command>(&script.statements[k]);
    if (!cmd) continue;
    std::optional<dsl::SourcePos> pos;
    if (k < script.positions.size()) pos = script.positions[k];
    report.results.push_back(exec.run(*cmd, pos));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

RunReport run_source(std::string_view text, const std::string& source, const RunOptions& options) {
  try {
    return run_script(dsl::parse(text), source, options);
  } catch (const dsl::DslError& e) {
    RunReport report;
    report.source = source;
    report.options = options;
    report.input_error = source + ":" + e.what();
    return report;
  }
}

// ---------------------------------------------------------------------------
// Example suites

namespace {

std::vector<std::string> two_prime_names(std::size_t r, std::size_t s) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j <= s; ++j) names.push_back("x" + std::to_string(j));
  for (std::size_t k = 1; k <= r; ++k) names.push_back("y" + std::to_string(k));
  return names;
}

struct PendingSuite {
  std::function<SuiteResult()> run;
  HilbertSeries series;
  std::vector<std::string> names;
};

void add_partial_sums(SuiteResult& suite, const HilbertSeries& s, std::size_t max_degree) {
  const CoefficientTable t = hilbert_coefficients(s);
  const long lo = std::max(0L, static_cast<long>(phi(s).degree()) - t.dim.clamped());
  std::size_t failures = 0;
  for (std::size_t n = static_cast<std::size_t>(lo); n <= max_degree; ++n)
    if (!partial_sum_check(s, n).holds) ++failures;
  const std::string range = "n in [" + std::to_string(lo) + ", " + std::to_string(max_degree) + "]";
  suite.checks.push_back({"partial-sums", std::nullopt, "holds for " + range,
                          failures == 0 ? "holds for " + range : std::to_string(failures) + " failures in " + range,
                          failures == 0});
}

CommandResult suite_result(const SuiteResult& s, const std::vector<std::string>& names) {
  CommandResult r;
  r.command = "suite";
  r.label = s.family;
  Json params = Json::object();
  for (const auto& [k, v] : s.params) {
    r.label += " " + k + "=" + std::to_string(v);
    params[k] = v;
  }
  r.ok = s.passed();
  r.data["family"] = s.family;
  r.data["params"] = std::move(params);
  r.data["passed"] = r.ok;
  Json checks = Json::array();
  for (const auto& c : s.checks) {
    Json j;
    j["label"] = c.label;
    j["i"] = c.i ? Json(*c.i) : Json(nullptr);
    j["expected"] = c.expected;
    j["actual"] = c.actual;
    j["pass"] = c.pass;
    checks.push_back(std::move(j));
    std::string line = "  " + c.label + (c.i ? " i=" + std::to_string(*c.i) : "") + ": " + c.actual;
    if (!c.pass) line += " (expected " + c.expected + ")";
    line += c.pass ? "  ok" : "  FAIL";
    r.lines.push_back(std::move(line));
  }
  r.data["checks"] = std::move(checks);
  Json verifications = Json::array();
  for (const auto& rep : s.reports) {
    verifications.push_back(parity_json(rep, names));
    r.lines.push_back("  verification i=" + std::to_string(rep.i) + ": " + (rep.passed() ? "ok" : "FAIL"));
    for (auto& l : parity_lines(rep)) r.lines.push_back("  " + l);
  }
  r.data["verifications"] = std::move(verifications);
  return r;
}

}  // namespace

RunReport paper_examples(const RunOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.source = "paper-examples";
  report.options = options;

  std::vector<PendingSuite> pending;
  const std::size_t d = 6;
  auto closed = [&](ClosedFamily which, ClosedFamilyParams p) {
    p.d = d;
    pending.push_back({[which, p] { return closed_family_suite(which, p); },
                       series_of(closed_family_instance(which, p).presentation), default_variable_names(d)});
  };
  for (std::size_t r = 0; r <= 8; ++r) closed(ClosedFamily::kShiftedFree, {.r = r});
  for (std::size_t k = 1; k <= 8; ++k) closed(ClosedFamily::kHypersurface, {.k = k});
  for (std::size_t k = 1; k <= 8; ++k)
    for (std::size_t l = 1; l <= 8; ++l) closed(ClosedFamily::kCompleteIntersection2, {.k = k, .l = l});
  for (std::size_t m = 1; m <= 6; ++m) closed(ClosedFamily::kHilbertBurch, {.m = m});

  const std::uint64_t seed = options.seed;
  const std::size_t trials = options.trials;
  for (std::size_t dd = 2; dd <= 6; ++dd)
    for (std::size_t s = 1; s < dd; ++s)
      pending.push_back({[=] { return maximal_prime_product_suite(dd, s, seed, trials); },
                         series_of_cyclic(maximal_prime_product_module(dd, s)), default_variable_names(dd)});
  for (std::size_t s = 2; s <= 5; ++s)
    for (std::size_t r = 1; r < s; ++r)
      pending.push_back({[=] { return two_prime_product_suite(r, s, seed, trials); },
                         series_of_cyclic(two_prime_product_module(r, s)), two_prime_names(r, s)});

  long required = 0;
  for (const auto& p : pending) required = std::max(required, p.series.numerator.degree());
  if (options.max_degree < static_cast<std::size_t>(required)) {
    report.input_error = "truncation degree " + std::to_string(options.max_degree) +
                         " is below " + std::to_string(required) +
                         ", the largest numerator degree among the example modules; rerun with --max-degree " +
                         std::to_string(required) + " or more";
    return report;
  }

  for (auto& p : pending) {
    SuiteResult suite = p.run();
    add_partial_sums(suite, p.series, options.max_degree);
    report.results.push_back(suite_result(suite, p.names));
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

// ---------------------------------------------------------------------------
// One-shot scripts

dsl::Script one_shot_script(const OneShotInput& input, dsl::CommandKind kind, std::size_t value) {
  dsl::Script script;
  script.variables = dsl::parse_variable_list(input.ring);
  const std::size_t dim = script.variables.size();
  auto push = [&](dsl::Statement st) {
    script.statements.push_back(std::move(st));
    script.positions.push_back(dsl::SourcePos{});
  };
  push(dsl::RingDecl{script.variables});

  dsl::IdealDecl ideal{"I", {}};
  if (!input.ideal.empty()) ideal.generators = dsl::parse_polynomial_list(input.ideal, script.variables);
  for (const auto& g : ideal.generators)
    if (!g.is_homogeneous())
      throw dsl::SemanticError(dsl::SourcePos{}, "inhomogeneous polynomial " + g.to_string(script.variables));
  script.symbols["I"] = {dsl::SymbolKind::kIdeal, script.statements.size()};
  push(std::move(ideal));
  script.symbols["M"] = {dsl::SymbolKind::kModule, script.statements.size()};
  push(dsl::ModuleDecl{"M", "I", input.shift});

  dsl::Command cmd{kind, "M", "", value};
  const bool needs_forms = kind == dsl::CommandKind::kSuperficial || kind == dsl::CommandKind::kAdmissible ||
                           kind == dsl::CommandKind::kVerify;
  if (needs_forms) {
    if (!input.forms) throw std::invalid_argument(std::string(to_string(kind)) + " needs linear forms");
    script.symbols["F"] = {dsl::SymbolKind::kForms, script.statements.size()};
    push(dsl::FormsDecl{"F", dsl::parse_linear_form_list(*input.forms, script.variables)});
    cmd.forms = "F";
  }
  (void)dim;
  push(std::move(cmd));
  return script;
}

// ---------------------------------------------------------------------------
// Rendering

ExitCode RunReport::exit_code() const {
  if (input_error) return ExitCode::kInputError;
  for (const auto& r : results)
    if (!r.ok) return ExitCode::kVerificationFailed;
  return ExitCode::kOk;
}

namespace {

const char* status_name(ExitCode c) {
  switch (c) {
    case ExitCode::kOk:
      return "ok";
    case ExitCode::kVerificationFailed:
      return "verification-failed";
    case ExitCode::kInputError:
      return "input-error";
  }
  return "?";
}

}  // namespace

Json RunReport::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["source"] = source;
  Json meta;
  meta["seed"] = options.seed;
  meta["trials"] = options.trials;
  meta["max_degree"] = options.max_degree;
  if (options.timing) meta["elapsed_seconds"] = elapsed_seconds;
  j["metadata"] = std::move(meta);
  Json results_json = Json::array();
  for (const auto& r : results) {
    Json e;
    e["command"] = r.command;
    e["label"] = r.label;
    if (r.pos) e["position"] = {{"line", r.pos->line}, {"column", r.pos->column}};
    e["ok"] = r.ok;
    e["data"] = r.data;
    results_json.push_back(std::move(e));
  }
  j["results"] = std::move(results_json);
  const ExitCode code = exit_code();
  j["status"] = status_name(code);
  j["exit_code"] = static_cast<int>(code);
  if (input_error) j["error"] = *input_error;
  return j;
}

std::string RunReport::to_text(bool quiet) const {
  std::ostringstream os;
  std::size_t failed = 0;
  for (const auto& r : results) {
    if (!r.ok) ++failed;
    if (quiet && r.ok) continue;
    os << (r.ok ? "[ok]   " : "[FAIL] ") << r.label;
    if (r.pos) os << "  (line " << r.pos->line << ")";
    os << '\n';
    if (!quiet)
      for (const auto& l : r.lines) os << l << '\n';
  }
  if (input_error) {
    os << "error: " << *input_error << '\n';
  } else {
    os << "status: " << status_name(exit_code()) << " (" << results.size() << " results, " << failed
       << " failed; seed " << options.seed << ", trials " << options.trials << ")";
    if (options.timing) os << " in " << elapsed_seconds << " s";
    os << '\n';
  }
  return os.str();
}

}  // namespace hilbcalc
