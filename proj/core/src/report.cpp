#include "liouville/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace liouville {

namespace {

using Json = nlohmann::ordered_json;

double round_ms(double ms) { return std::round(ms * 1000) / 1000; }

}  // namespace

std::string report_json(const SolveReport& rep, const ReportOptions& opts) {
  RenderOptions ro{RenderStyle::json_embeddable, opts.param_name};
  Json j;
  j["status"] = to_string(rep.status);
  j["method"] = to_string(rep.method);
  if (rep.factor) {
    Json factors = Json::array();
    for (const Factor& f : rep.factor->factors)
      factors.push_back({{"poly", render(f.p, ro)}, {"exponent", render(f.exponent, ro)}});
    j["integrating_factor"] = {{"r0", render(rep.factor->r0, ro)}, {"factors", factors}};
  } else {
    j["integrating_factor"] = nullptr;
  }
  j["verified"] = rep.verified;
  if (rep.first_integral) {
    j[rep.first_integral->closed ? "first_integral" : "one_form"] = rep.first_integral->to_string(ro);
  }
  Json darboux = Json::array();
  for (const DarbouxPair& p : rep.darboux) darboux.push_back({{"p", render(p.p, ro)}, {"g", render(p.g, ro)}});
  j["darboux"] = darboux;
  j["degree_bound"] = rep.degree_bound;
  j["degree_used"] = rep.degree_used;
  if (rep.r0_split) j["r0_split"] = {{"r", render(rep.r0_split->first, ro)}, {"s", render(rep.r0_split->second, ro)}};
  j["notes"] = rep.notes;
  if (opts.timings) {
    Json t = Json::object();
    for (const auto& [stage, ms] : rep.timings_ms) t[stage] = round_ms(ms);
    j["timings_ms"] = t;
  }
  return j.dump(2);
}

std::string report_text(const SolveReport& rep, const ReportOptions& opts) {
  RenderOptions ro{RenderStyle::plain, opts.param_name};
  std::ostringstream out;
  out << "status: " << to_string(rep.status) << "\n";
  out << "method: " << to_string(rep.method) << "\n";
  if (rep.factor) {
    out << "R = " << render(*rep.factor, ro) << "\n";
    out << "verified: " << (rep.verified ? "true" : "false") << "\n";
  }
  if (rep.r0_split)
    out << "r(x) = " << render(rep.r0_split->first, ro) << ", s(y) = " << render(rep.r0_split->second, ro) << "\n";
  if (rep.first_integral) {
    out << (rep.first_integral->closed ? "first integral: F = " : "closed one-form: ")
        << rep.first_integral->to_string(ro) << "\n";
  }
  out << "darboux pairs (degree <= " << rep.degree_bound << "):";
  if (rep.darboux.empty()) out << " none";
  out << "\n";
  for (const DarbouxPair& p : rep.darboux) out << "  p = " << render(p.p, ro) << "   g = " << render(p.g, ro) << "\n";
  for (const std::string& n : rep.notes) out << "note: " << n << "\n";
  if (opts.timings && !rep.timings_ms.empty()) {
    out << "timings (ms):";
    for (const auto& [stage, ms] : rep.timings_ms) out << " " << stage << "=" << round_ms(ms);
    out << "\n";
  }
  return out.str();
}

}  // namespace liouville
