#include <fstream>
#include <map>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "liouville/corpus.hpp"
#include "liouville/errors.hpp"
#include "liouville/parser.hpp"
#include "liouville/report.hpp"
#include "liouville/solver.hpp"

namespace {

using namespace liouville;

constexpr int kSolved = 0;
constexpr int kInputError = 1;
constexpr int kNoResult = 2;
constexpr int kTimeout = 3;

struct SolveArgs {
  std::string ode;
  int degree = 3;
  std::string cases = "auto";
  std::vector<std::string> params;
  bool json = false;
  double timeout = 60;
  int ansatz_mult = 2;
  std::optional<int> ansatz_slack;
  bool no_timings = false;
};

struct CorpusArgs {
  std::string file;
  bool json = false;
  int degree = 3;
  double timeout = 60;
  bool no_timings = false;
};

int run_solve(const SolveArgs& a) {
  static const std::map<std::string, CaseSelection> cases = {
      {"auto", CaseSelection::automatic}, {"ps", CaseSelection::ps}, {"x", CaseSelection::x},
      {"y", CaseSelection::y},            {"xy", CaseSelection::xy}};
  FOODE eq = parse_foode(a.ode, ParseOptions{a.params});
  SolveConfig cfg;
  cfg.max_degree = a.degree;
  cfg.cases = cases.at(a.cases);
  cfg.timeout_seconds = a.timeout;
  cfg.ansatz.multiplicity = a.ansatz_mult;
  cfg.ansatz.slack = a.ansatz_slack;
  SolveReport rep = solve(eq, cfg);
  ReportOptions ro;
  if (!a.params.empty()) ro.param_name = a.params.front();
  ro.timings = !a.no_timings;
  if (a.json)
    std::cout << report_json(rep, ro) << "\n";
  else
    std::cout << report_text(rep, ro);
  switch (rep.status) {
    case Status::solved: return kSolved;
    case Status::no_result: return kNoResult;
    case Status::timeout: return kTimeout;
  }
  return kNoResult;
}

int run_corpus_file(const CorpusArgs& a) {
  std::ifstream in(a.file);
  if (!in) {
    std::cerr << "error: cannot open " << a.file << "\n";
    return kInputError;
  }
  CorpusOptions opts;
  opts.default_degree = a.degree;
  opts.timeout_seconds = a.timeout;
  CorpusSummary s = run_corpus(in, opts);
  if (a.json)
    std::cout << corpus_json(s, !a.no_timings) << "\n";
  else
    std::cout << corpus_text(s);
  return s.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liouvillian integrating factors for dy/dx = M(x,y)/N(x,y)"};
  app.require_subcommand(1);

  SolveArgs sa;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Search for an integrating factor of one equation");
  solve_cmd->add_option("ode", sa.ode, "\"dy/dx = <expr>\" or \"<expr1> * dy/dx + <expr2> = 0\"")->required();
  solve_cmd->add_option("--degree", sa.degree, "Darboux degree bound")->capture_default_str()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--case", sa.cases, "auto, ps, x, y or xy")
      ->capture_default_str()
      ->check(CLI::IsMember({"auto", "ps", "x", "y", "xy"}));
  solve_cmd->add_option("--param", sa.params, "Named rational parameter (at most one)");
  solve_cmd->add_flag("--json", sa.json, "Machine-readable report");
  solve_cmd->add_option("--timeout", sa.timeout, "Wall-clock limit in seconds")->capture_default_str()->check(CLI::PositiveNumber);
  solve_cmd->add_option("--ansatz-mult", sa.ansatz_mult, "Denominator multiplicity K for case r(x)+s(y)")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--ansatz-slack", sa.ansatz_slack, "Numerator degree slack (default max(deg M, deg N))")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_flag("--no-timings", sa.no_timings, "Omit timings for byte-identical output");

  CorpusArgs ca;
  CLI::App* corpus_cmd = app.add_subcommand("corpus", "Run a JSON-lines corpus of equations");
  corpus_cmd->add_option("file", ca.file, "Corpus file, one JSON object per line")->required();
  corpus_cmd->add_flag("--json", ca.json, "Machine-readable summary");
  corpus_cmd->add_option("--degree", ca.degree, "Default Darboux degree bound")->capture_default_str()->check(CLI::PositiveNumber);
  corpus_cmd->add_option("--timeout", ca.timeout, "Per-entry limit in seconds")->capture_default_str()->check(CLI::PositiveNumber);
  corpus_cmd->add_flag("--no-timings", ca.no_timings, "Omit timings for byte-identical output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*solve_cmd) return run_solve(sa);
    return run_corpus_file(ca);
  } catch (const liouville::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
