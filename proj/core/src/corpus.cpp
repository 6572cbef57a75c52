#include "liouville/corpus.hpp"

#include <chrono>
#include <istream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "liouville/errors.hpp"
#include "liouville/integrating_factor.hpp"
#include "liouville/parser.hpp"
#include "liouville/report.hpp"

namespace liouville {

namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string get_string(const Json& j, const char* key) {
  if (!j[key].is_string()) throw std::invalid_argument(std::string("field '") + key + "' must be a string");
  return j[key].get<std::string>();
}

}  // namespace

std::optional<Method> method_from_string(const std::string& s) {
  for (Method m : {Method::classic_ps, Method::liouvillian_x, Method::liouvillian_y, Method::liouvillian_xy, Method::none})
    if (s == to_string(m)) return m;
  return std::nullopt;
}

std::optional<Status> status_from_string(const std::string& s) {
  for (Status st : {Status::solved, Status::no_result, Status::timeout})
    if (s == to_string(st)) return st;
  return std::nullopt;
}

CorpusEntry parse_corpus_entry(const std::string& line) {
  Json j = Json::parse(line, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("invalid JSON");
  if (!j.is_object()) throw std::invalid_argument("record must be a JSON object");
  CorpusEntry e;
  if (!j.contains("ode")) throw std::invalid_argument("missing field 'ode'");
  e.ode = get_string(j, "ode");
  e.id = j.contains("id") ? get_string(j, "id") : e.ode;
  if (j.contains("params")) {
    if (!j["params"].is_array()) throw std::invalid_argument("field 'params' must be an array");
    for (const Json& p : j["params"]) {
      if (!p.is_string()) throw std::invalid_argument("parameter names must be strings");
      e.params.push_back(p.get<std::string>());
    }
  }
  if (j.contains("expect_method")) {
    e.expect_method = method_from_string(get_string(j, "expect_method"));
    if (!e.expect_method) throw std::invalid_argument("unknown expect_method '" + get_string(j, "expect_method") + "'");
  }
  if (j.contains("expect_status")) {
    e.expect_status = status_from_string(get_string(j, "expect_status"));
    if (!e.expect_status) throw std::invalid_argument("unknown expect_status '" + get_string(j, "expect_status") + "'");
  }
  if (j.contains("expect_R")) e.expect_r = get_string(j, "expect_R");
  if (j.contains("max_degree")) {
    if (!j["max_degree"].is_number_integer() || j["max_degree"].get<int>() < 1)
      throw std::invalid_argument("field 'max_degree' must be a positive integer");
    e.max_degree = j["max_degree"].get<int>();
  }
  return e;
}

CorpusSummary run_corpus(std::istream& in, const CorpusOptions& opts) {
  CorpusSummary sum;
  const auto t_all = Clock::now();
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    CorpusResult res;
    res.line = number;
    const auto t0 = Clock::now();
    try {
      CorpusEntry e = parse_corpus_entry(line);
      res.id = e.id;
      ParseOptions po{e.params};
      if (!e.params.empty()) res.param_name = e.params.front();
      FOODE eq = parse_foode(e.ode, po);
      std::optional<IntegratingFactor> expected;
      if (e.expect_r) expected = parse_integrating_factor(*e.expect_r, po);

      SolveConfig cfg;
      cfg.max_degree = e.max_degree.value_or(opts.default_degree);
      cfg.timeout_seconds = opts.timeout_seconds;
      SolveReport rep = solve(eq, cfg);

      const Status want = e.expect_status.value_or(Status::solved);
      if (rep.status != want)
        res.failures.push_back(std::string("status ") + to_string(rep.status) + ", expected " + to_string(want));
      if (e.expect_method && rep.method != *e.expect_method)
        res.failures.push_back(std::string("method ") + to_string(rep.method) + ", expected " + to_string(*e.expect_method));
      if (expected) {
        if (!verify_integrating_factor(eq, *expected)) res.failures.push_back("expect_R does not verify against the ode");
        if (!rep.factor)
          res.failures.push_back("no factor to compare with expect_R");
        else if (!equivalent_up_to_scale(*rep.factor, *expected))
          res.failures.push_back("factor " + render(*rep.factor) + " differs from expect_R");
      }
      if (rep.factor && !rep.verified) res.failures.push_back("factor failed verification");
      res.passed = res.failures.empty();
      res.report = std::move(rep);
    } catch (const std::exception& ex) {
      res.malformed = true;
      res.failures.push_back(ex.what());
    }
    res.elapsed_ms = ms_since(t0);
    if (res.malformed)
      ++sum.malformed;
    else if (res.passed)
      ++sum.passed;
    else
      ++sum.failed;
    sum.results.push_back(std::move(res));
  }
  sum.elapsed_ms = ms_since(t_all);
  return sum;
}

std::string corpus_text(const CorpusSummary& s) {
  std::ostringstream out;
  for (const CorpusResult& r : s.results) {
    RenderOptions ro{RenderStyle::plain, r.param_name.empty() ? "b" : r.param_name};
    if (r.malformed) {
      out << "line " << r.line << ": MALFORMED " << (r.failures.empty() ? "" : r.failures.front()) << "\n";
      continue;
    }
    out << (r.passed ? "PASS " : "FAIL ") << r.id;
    if (r.report) {
      out << "  [" << to_string(r.report->status) << ", " << to_string(r.report->method) << "]";
      if (r.report->factor) out << "  R = " << render(*r.report->factor, ro);
    }
    out << "\n";
    for (const std::string& f : r.failures) out << "    " << f << "\n";
  }
  const int total = s.passed + s.failed;
  out << s.passed << "/" << total << " passed";
  if (s.malformed) out << ", " << s.malformed << " malformed";
  out << "\n";
  return out.str();
}

std::string corpus_json(const CorpusSummary& s, bool timings) {
  Json entries = Json::array();
  for (const CorpusResult& r : s.results) {
    Json e;
    e["line"] = r.line;
    e["id"] = r.id;
    e["result"] = r.malformed ? "malformed" : (r.passed ? "pass" : "fail");
    e["failures"] = r.failures;
    if (r.report) {
      ReportOptions ro;
      if (!r.param_name.empty()) ro.param_name = r.param_name;
      ro.timings = timings;
      e["report"] = Json::parse(report_json(*r.report, ro));
    }
    entries.push_back(e);
  }
  Json j;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["malformed"] = s.malformed;
  j["entries"] = entries;
  if (timings) j["elapsed_ms"] = std::round(s.elapsed_ms * 1000) / 1000;
  return j.dump(2);
}

}  // namespace liouville
