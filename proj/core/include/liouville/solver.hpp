#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/darboux.hpp"
#include "liouville/foode.hpp"
#include "liouville/integrating_factor.hpp"
#include "liouville/render.hpp"

namespace liouville {

enum class Method { classic_ps, liouvillian_x, liouvillian_y, liouvillian_xy, none };
enum class Status { solved, no_result, timeout };

const char* to_string(Method m);
const char* to_string(Status s);

// Candidate denominators for r'(x) and s'(y) in the r(x) + s(y) case:
// (x-only content of N)^k and (y-only content of M)^k for k = 1..multiplicity,
// numerators of degree up to deg(denominator) + slack.
struct AnsatzOptions {
  int multiplicity = 2;
  std::optional<int> slack;  // default: max(deg M, deg N)
};

struct CaseOutcome {
  std::optional<IntegratingFactor> factor;
  RatFunc r, s;  // r0 = r(x) + s(y) when factor is set
  bool ansatz_exhausted = false;
};

// R = prod p_i^n_i with sum n_i g_i = -(N_x + M_y); free exponents set to 0.
std::optional<IntegratingFactor> classic_ps(const FOODE& eq, const std::vector<DarbouxPair>& pairs);
// R = exp(r0(x)) prod p_i^c_i.
std::optional<IntegratingFactor> liouvillian_case_x(const FOODE& eq, const std::vector<DarbouxPair>& pairs);
// R = exp(r0(y)) prod p_i^c_i.
std::optional<IntegratingFactor> liouvillian_case_y(const FOODE& eq, const std::vector<DarbouxPair>& pairs);
// R = exp(r(x) + s(y)) prod p_i^c_i via a finite rational ansatz for r', s'.
CaseOutcome liouvillian_case_xy(const FOODE& eq, const std::vector<DarbouxPair>& pairs,
                                const AnsatzOptions& ansatz = {});

// Exact check of D[r0] + sum c_i g_i + N_x + M_y == 0, where g_i = D[p_i]/p_i
// must be polynomial. Never expands the exponential.
bool verify_integrating_factor(const FOODE& eq, const IntegratingFactor& r);

// F = exp(exp_arg) * rational + sum kappa_j log(q_j) with F_x = R M and
// F_y = -R N, or the closed one-form R M dx - R N dy when no table entry
// applies.
struct FirstIntegral {
  bool closed = false;
  RatFunc exp_arg;
  RatFunc rational;
  std::vector<std::pair<MPoly, Coeff>> logs;
  IntegratingFactor factor;  // for the one-form
  MPoly m, n;

  std::string to_string(const RenderOptions& opts = {}) const;
};
FirstIntegral first_integral(const FOODE& eq, const IntegratingFactor& r);
// Exact check F_x = R M, F_y = -R N for a closed form.
bool verify_first_integral(const FOODE& eq, const IntegratingFactor& r, const FirstIntegral& f);

enum class CaseSelection { automatic, ps, x, y, xy };

struct SolveConfig {
  int max_degree = 3;
  CaseSelection cases = CaseSelection::automatic;
  double timeout_seconds = 60;
  AnsatzOptions ansatz;
  bool want_first_integral = true;
};

struct SolveReport {
  Status status = Status::no_result;
  Method method = Method::none;
  std::optional<IntegratingFactor> factor;
  bool verified = false;
  std::optional<FirstIntegral> first_integral;
  std::vector<DarbouxPair> darboux;
  int degree_bound = 0;
  int degree_used = 0;  // Darboux degree at which the factor was found
  std::optional<std::pair<RatFunc, RatFunc>> r0_split;  // (r(x), s(y)) for liouvillian_xy
  std::vector<std::pair<std::string, double>> timings_ms;
  std::vector<std::string> notes;
};

// Darboux passes of increasing degree; after each, classic PS and the
// cases x, y, r(x)+s(y) in that order. The first verified factor wins.
SolveReport solve(const FOODE& eq, const SolveConfig& config = {});

}  // namespace liouville
