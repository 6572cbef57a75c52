#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "liouville/solver.hpp"

namespace liouville {

// One JSON object per line:
// {"id", "ode", "params"?, "expect_method"?, "expect_status"?, "expect_R"?,
//  "max_degree"?, "note"?}
struct CorpusEntry {
  std::string id;
  std::string ode;
  std::vector<std::string> params;
  std::optional<Method> expect_method;
  std::optional<Status> expect_status;
  std::optional<std::string> expect_r;
  std::optional<int> max_degree;
};

// Throws std::invalid_argument on a malformed record.
CorpusEntry parse_corpus_entry(const std::string& line);
std::optional<Method> method_from_string(const std::string& s);
std::optional<Status> status_from_string(const std::string& s);

struct CorpusOptions {
  int default_degree = 3;  // an entry's max_degree takes precedence
  double timeout_seconds = 60;
  bool timings = true;
};

struct CorpusResult {
  std::size_t line = 0;
  std::string id;
  bool malformed = false;
  bool passed = false;
  std::vector<std::string> failures;  // or the parse error when malformed
  std::optional<SolveReport> report;
  std::string param_name;
  double elapsed_ms = 0;
};

struct CorpusSummary {
  std::vector<CorpusResult> results;
  int passed = 0;
  int failed = 0;
  int malformed = 0;
  double elapsed_ms = 0;
  bool ok() const { return failed == 0 && malformed == 0; }
};

// Blank lines and lines starting with '#' are skipped. An entry passes when
// every expectation holds; without expect_status it must be solved, and a
// present expect_R must itself verify against the equation.
CorpusSummary run_corpus(std::istream& in, const CorpusOptions& opts = {});

std::string corpus_text(const CorpusSummary& s);
std::string corpus_json(const CorpusSummary& s, bool timings = true);

}  // namespace liouville
