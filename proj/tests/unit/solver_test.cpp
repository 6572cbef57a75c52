#include <gtest/gtest.h>

#include <random>

#include "liouville/darboux.hpp"
#include "liouville/parser.hpp"
#include "liouville/solver.hpp"
#include "test_util.hpp"

namespace liouville {
namespace {

using testing::F;
using testing::ode;
using testing::P;

FOODE kamke211() { return parse_foode("dy/dx = (3*x^2*y^2 + x^3 + 1)/(4*(x+1)*(x^2-x+1)*y)"); }
FOODE kamke_i18() { return parse_foode("dy/dx = y^2 + y*x + x - 1"); }
FOODE kamke_i129() { return parse_foode("dy/dx = (x*y - y^2)/(x + 1)"); }
FOODE abel() { return parse_foode("dy/dx = y^2*(y + x - 1)/x^2"); }
ParseOptions with_b() { return ParseOptions{{"b"}}; }
FOODE i235_reconstructed() { return parse_foode("dy/dx = -b*y/(x*y + 1)", with_b()); }

IntegratingFactor R(const std::string& s, const ParseOptions& o = {}) { return parse_integrating_factor(s, o); }

std::vector<DarbouxPair> pairs_of(const FOODE& eq, int degree) { return find_darboux(eq, degree).pairs; }

// D[log(a/b)]: zero exactly when a/b is constant along the flow.
RatFunc log_ratio_derivative(const FOODE& eq, const IntegratingFactor& a, const IntegratingFactor& b) {
  RatFunc acc = d_operator(eq, a.r0 - b.r0);
  auto add = [&](const IntegratingFactor& r, long sign) {
    for (const Factor& f : r.factors)
      acc += RatFunc(MPoly(f.exponent * Coeff(sign))) * RatFunc(d_operator(eq, f.p), f.p);
  };
  add(a, 1);
  add(b, -1);
  return acc;
}

// Equations with known integrating factors; every solved one must verify.
const std::vector<std::string>& corpus() {
  static const std::vector<std::string> v = {
      "dy/dx = (3*x^2*y^2 + x^3 + 1)/(4*(x+1)*(x^2-x+1)*y)",
      "dy/dx = y^2 + y*x + x - 1",
      "dy/dx = (x*y - y^2)/(x + 1)",
      "dy/dx = y^2*(y + x - 1)/x^2",
      "dy/dx = x",
      "dy/dx = y",
      "dy/dx = x*y",
      "dy/dx = y + x",
      "dy/dx = y/x",
      "dy/dx = -x/y",
      "dy/dx = y^2",
      "dy/dx = y + x*y^2",
      "dy/dx = y - y^2",
      "dy/dx = (y + x^2)/x",
      "dy/dx = -2*x*y",
      "dy/dx = y + 1",
      "dy/dx = (x + y)/(x - y)",
      "dy/dx = (y + 1)/(x*y - x^2)",
  };
  return v;
}

// Classic Prelle-Singer.

TEST(ClassicPS, Kamke211IsThreeHalvesPower) {
  FOODE eq = kamke211();
  auto r = classic_ps(eq, pairs_of(eq, 3));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*r, R("(x^3 + 1)^(-3/2)")));
  EXPECT_TRUE(verify_integrating_factor(eq, *r));
}

TEST(ClassicPS, ExactEquationNeedsNoPairs) {
  FOODE eq = parse_foode("dy/dx = -x/y");
  auto r = classic_ps(eq, {});
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->r0.is_zero());
  EXPECT_TRUE(r->factors.empty());
}

TEST(ClassicPS, KamkeI18HasNoClassicFactor) {
  FOODE eq = kamke_i18();
  for (int d = 1; d <= 4; ++d) EXPECT_FALSE(classic_ps(eq, pairs_of(eq, d)).has_value()) << "degree " << d;
}

// Case r0(x).

TEST(LiouvillianX, KamkeI129) {
  FOODE eq = kamke_i129();
  auto r = liouvillian_case_x(eq, pairs_of(eq, 1));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*r, R("exp(x) * y^-2 * (x+1)^-2")));
  EXPECT_EQ(r->r0, F("x"));
}

TEST(LiouvillianX, KamkeI18) {
  FOODE eq = kamke_i18();
  auto r = liouvillian_case_x(eq, pairs_of(eq, 1));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*r, R("exp(x^2/2 - 2*x) * (y+1)^-2")));
  ASSERT_EQ(r->factors.size(), 1u);
  EXPECT_EQ(r->factors[0].exponent, Coeff(-2));
}

TEST(LiouvillianX, AbelNeedsBothVariables) {
  FOODE eq = abel();
  EXPECT_FALSE(liouvillian_case_x(eq, pairs_of(eq, 1)).has_value());
}

// Case r0(y).

TEST(LiouvillianY, ReconstructedParametricEquation) {
  FOODE eq = i235_reconstructed();
  auto ps = pairs_of(eq, 1);
  ASSERT_FALSE(ps.empty());
  EXPECT_EQ(ps[0], (DarbouxPair{P("y"), P("-b", with_b())}));
  auto r = liouvillian_case_y(eq, ps);
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*r, R("exp(y/b) * y^-1", with_b())));
  EXPECT_TRUE(verify_integrating_factor(eq, *r));
}

TEST(LiouvillianY, MirroredI129) {
  FOODE eq = parse_foode("dy/dx = (y + 1)/(x*y - x^2)");
  auto r = liouvillian_case_y(eq, pairs_of(eq, 1));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*r, R("exp(y) * x^-2 * (y+1)^-2")));
}

TEST(LiouvillianY, KamkeI129HasNoYFactor) {
  FOODE eq = kamke_i129();
  EXPECT_FALSE(liouvillian_case_y(eq, pairs_of(eq, 1)).has_value());
}

// Case r(x) + s(y).

TEST(LiouvillianXY, Abel) {
  FOODE eq = abel();
  auto ps = pairs_of(eq, 1);
  ASSERT_EQ(ps.size(), 3u);
  CaseOutcome out = liouvillian_case_xy(eq, ps);
  ASSERT_TRUE(out.factor.has_value());
  EXPECT_EQ(out.r, F("1/x"));
  EXPECT_EQ(out.s, F("1/y"));
  EXPECT_TRUE(equivalent_up_to_scale(*out.factor, R("exp(1/x + 1/y) * y^-2 * (x+y)^-1")));
  // c = (0, -2, -1) over the pairs x, y, x + y
  std::vector<Coeff> c(ps.size(), Coeff(0));
  for (const Factor& f : out.factor->factors)
    for (std::size_t i = 0; i < ps.size(); ++i)
      if (f.p == ps[i].p) c[i] = f.exponent;
  EXPECT_EQ(c, (std::vector<Coeff>{Coeff(0), Coeff(-2), Coeff(-1)}));
}

TEST(LiouvillianXY, ContainsCaseXAnswerForI129) {
  FOODE eq = kamke_i129();
  CaseOutcome out = liouvillian_case_xy(eq, pairs_of(eq, 1));
  ASSERT_TRUE(out.factor.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*out.factor, R("exp(x) * y^-2 * (x+1)^-2")));
  EXPECT_TRUE(out.s.is_constant());
}

TEST(LiouvillianXY, RationalFirstIntegralBranch) {
  // Any member of the family x^a y^b with a + b = -2 is valid; 1/(x y) is one.
  FOODE eq = parse_foode("dy/dx = y/x");
  CaseOutcome out = liouvillian_case_xy(eq, pairs_of(eq, 1));
  ASSERT_TRUE(out.factor.has_value());
  EXPECT_TRUE(out.r.is_constant());
  EXPECT_TRUE(out.s.is_constant());
  EXPECT_TRUE(verify_integrating_factor(eq, *out.factor));
  IntegratingFactor expected = R("x^-1 * y^-1");
  EXPECT_TRUE(verify_integrating_factor(eq, expected));
  EXPECT_TRUE(log_ratio_derivative(eq, *out.factor, expected).is_zero());
}

// Verification.

TEST(Verify, KnownFactors) {
  EXPECT_TRUE(verify_integrating_factor(kamke_i129(), R("exp(x) * y^-2 * (x+1)^-2")));
  EXPECT_TRUE(verify_integrating_factor(abel(), R("exp(1/x + 1/y) * y^-2 * (x+y)^-1")));
  EXPECT_TRUE(verify_integrating_factor(kamke211(), R("(x^3+1)^(-3/2)")));
}

TEST(Verify, PerturbedExponentFails) {
  EXPECT_FALSE(verify_integrating_factor(kamke_i129(), R("exp(x) * y^-2 * (x+1)^-1")));
  EXPECT_FALSE(verify_integrating_factor(kamke_i129(), R("exp(2*x) * y^-2 * (x+1)^-2")));
}

TEST(Verify, NonDarbouxBaseFails) {
  EXPECT_FALSE(verify_integrating_factor(kamke_i129(), R("exp(x) * (y + 2)^-2 * (x+1)^-2")));
}

// First integrals.

TEST(FirstIntegral, TrivialExactEquationIsClosed) {
  FOODE eq = parse_foode("dy/dx = x");
  IntegratingFactor one;
  FirstIntegral f = first_integral(eq, one);
  ASSERT_TRUE(f.closed);
  EXPECT_TRUE(f.exp_arg.is_zero());
  EXPECT_TRUE((f.rational - F("x^2/2 - y")).is_constant());
  EXPECT_TRUE(verify_first_integral(eq, one, f));
}

TEST(FirstIntegral, SeparableWithLogs) {
  FOODE eq = parse_foode("dy/dx = y/x");
  IntegratingFactor r = R("x^-1 * y^-1");
  FirstIntegral f = first_integral(eq, r);
  ASSERT_TRUE(f.closed);
  EXPECT_TRUE(verify_first_integral(eq, r, f));
}

TEST(FirstIntegral, ExponentialTimesRational) {
  FOODE eq = kamke_i18();
  IntegratingFactor r = R("exp(x^2/2 - 2*x) * (y+1)^-2");
  FirstIntegral f = first_integral(eq, r);
  if (f.closed) EXPECT_TRUE(verify_first_integral(eq, r, f));
}

TEST(FirstIntegral, Kamke211IsUnevaluated) {
  FOODE eq = kamke211();
  FirstIntegral f = first_integral(eq, R("(x^3+1)^(-3/2)"));
  EXPECT_FALSE(f.closed);
  EXPECT_NE(f.to_string().find("dx"), std::string::npos);
}

TEST(FirstIntegral, I129IsUnevaluated) {
  FOODE eq = kamke_i129();
  FirstIntegral f = first_integral(eq, R("exp(x) * y^-2 * (x+1)^-2"));
  EXPECT_FALSE(f.closed);
}

// Orchestration.

TEST(Solve, MethodsOfReferenceEquations) {
  SolveReport a = solve(kamke211());
  EXPECT_EQ(a.status, Status::solved);
  EXPECT_EQ(a.method, Method::classic_ps);
  ASSERT_TRUE(a.factor.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*a.factor, R("(x^3 + 1)^(-3/2)")));

  SolveReport b = solve(kamke_i18());
  EXPECT_EQ(b.method, Method::liouvillian_x);
  ASSERT_TRUE(b.factor.has_value());
  EXPECT_TRUE(equivalent_up_to_scale(*b.factor, R("exp(x^2/2 - 2*x) * (y+1)^-2")));

  SolveReport c = solve(abel());
  EXPECT_EQ(c.method, Method::liouvillian_xy);
  ASSERT_TRUE(c.r0_split.has_value());
  EXPECT_EQ(c.r0_split->first, F("1/x"));
  EXPECT_EQ(c.r0_split->second, F("1/y"));
}

TEST(Solve, CaseSelectionRestrictsMethods) {
  SolveConfig cfg;
  cfg.cases = CaseSelection::ps;
  cfg.max_degree = 4;
  SolveReport r = solve(kamke_i18(), cfg);
  EXPECT_EQ(r.status, Status::no_result);
  EXPECT_EQ(r.method, Method::none);
  EXPECT_FALSE(r.darboux.empty());
}

TEST(Solve, ReportFields) {
  SolveReport r = solve(kamke_i129());
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.degree_bound, 3);
  EXPECT_EQ(r.degree_used, 1);
  EXPECT_FALSE(r.timings_ms.empty());
  ASSERT_TRUE(r.first_integral.has_value());
  EXPECT_FALSE(r.first_integral->closed);
}

TEST(Solve, ExpiredDeadlineTimesOut) {
  SolveConfig cfg;
  cfg.timeout_seconds = 1e-9;
  SolveReport r = solve(kamke211(), cfg);
  EXPECT_EQ(r.status, Status::timeout);
  EXPECT_FALSE(r.factor.has_value());
}

// Properties.

TEST(SolveProperty, EverySolvedCorpusEquationVerifies) {
  int solved = 0;
  for (const std::string& s : corpus()) {
    FOODE eq = parse_foode(s);
    SolveReport r = solve(eq);
    if (r.status != Status::solved) continue;
    ++solved;
    ASSERT_TRUE(r.factor.has_value()) << s;
    EXPECT_TRUE(r.verified) << s;
    EXPECT_TRUE(verify_integrating_factor(eq, *r.factor)) << s;
    if (r.first_integral && r.first_integral->closed)
      EXPECT_TRUE(verify_first_integral(eq, *r.factor, *r.first_integral)) << s;
  }
  EXPECT_EQ(solved, static_cast<int>(corpus().size()));
}

TEST(SolveProperty, FiniteDifferenceDivergenceWithinTruncationBound) {
  std::mt19937 rng(20261018);
  for (const std::string& s : corpus()) {
    FOODE eq = parse_foode(s);
    SolveReport r = solve(eq);
    if (!r.factor) continue;
    testing::NumericOutcome n = testing::numeric_divergence_check(eq, *r.factor, rng);
    EXPECT_EQ(n.points, 20) << s;
    EXPECT_EQ(n.failures, 0) << s << " worst ratio " << static_cast<double>(n.worst);
  }
}

TEST(SolveProperty, FiniteDifferenceRejectsWrongFactor) {
  std::mt19937 rng(7);
  testing::NumericOutcome n =
      testing::numeric_divergence_check(kamke_i129(), R("exp(x) * y^-2 * (x+1)^-1"), rng);
  EXPECT_EQ(n.points, 20);
  EXPECT_GT(n.failures, 10);
}

TEST(SolveProperty, CaseXyContainsCaseX) {
  for (const std::string& s : corpus()) {
    FOODE eq = parse_foode(s);
    auto ps = pairs_of(eq, 2);
    auto x = liouvillian_case_x(eq, ps);
    if (!x) continue;
    CaseOutcome xy = liouvillian_case_xy(eq, ps);
    ASSERT_TRUE(xy.factor.has_value()) << s;
    EXPECT_TRUE(verify_integrating_factor(eq, *xy.factor)) << s;
    EXPECT_TRUE(log_ratio_derivative(eq, *x, *xy.factor).is_zero()) << s;
  }
}

TEST(SolveProperty, DegreeMonotonicity) {
  for (const std::string& s : corpus()) {
    FOODE eq = parse_foode(s);
    for (int d = 1; d <= 2; ++d) {
      SolveConfig lo, hi;
      lo.max_degree = d;
      hi.max_degree = d + 1;
      lo.want_first_integral = hi.want_first_integral = false;
      SolveReport a = solve(eq, lo);
      if (a.status != Status::solved) continue;
      SolveReport b = solve(eq, hi);
      EXPECT_EQ(b.status, Status::solved) << s << " at " << d + 1;
      EXPECT_TRUE(b.verified) << s;
    }
  }
}

TEST(SolveProperty, PlantedLinearInvariantGivesVerifiedFactorOrNothing) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    testing::PlantedEquation pe = testing::planted_darboux(rng, 1);
    SolveConfig cfg;
    cfg.max_degree = 1;
    cfg.timeout_seconds = 10;
    cfg.want_first_integral = false;
    SolveReport r = solve(pe.eq, cfg);
    bool found = false;
    for (const DarbouxPair& p : r.darboux) found = found || p.p == pe.p;
    EXPECT_TRUE(found) << render(pe.eq.rhs());
    if (r.status == Status::solved) EXPECT_TRUE(verify_integrating_factor(pe.eq, *r.factor));
  }
}

}  // namespace
}  // namespace liouville
