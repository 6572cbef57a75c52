#pragma once

#include <string>

#include "liouville/render.hpp"
#include "liouville/solver.hpp"

namespace liouville {

struct ReportOptions {
  std::string param_name = "b";
  bool timings = true;  // off for byte-identical output across runs
};

// Schema: status, method, integrating_factor {r0, factors [{poly, exponent}]},
// verified, first_integral | one_form, darboux [{p, g}], degree_bound,
// degree_used, r0_split {r, s} (case r(x)+s(y) only), notes, timings_ms.
std::string report_json(const SolveReport& report, const ReportOptions& opts = {});
std::string report_text(const SolveReport& report, const ReportOptions& opts = {});

}  // namespace liouville
