#include <gtest/gtest.h>

#include <random>

#include "liouville/darboux.hpp"
#include "liouville/errors.hpp"
#include "liouville/polysys.hpp"
#include "test_util.hpp"

namespace liouville {
namespace {

using testing::ode;
using testing::P;

SysPoly var(std::size_t n, std::size_t i) { return SysPoly::variable(n, i); }
SysPoly cst(std::size_t n, long c) { return SysPoly(n, Coeff(c)); }

bool satisfies(const CoeffSystem& sys, const SolutionBranch& b) {
  for (const auto& e : sys.equations) {
    SysPoly r = e;
    // Free unknowns map to themselves, so substituting every value is exact.
    for (std::size_t i = sys.unknowns.size(); i-- > 0;)
      if (!b.free[i]) r = r.substitute(i, b.values[i]);
    if (!r.is_zero()) return false;
  }
  return true;
}

TEST(SolveSystem, HyperbolaMeetsDiagonal) {
  CoeffSystem sys{{"u", "v"}, {var(2, 0) * var(2, 1) - cst(2, 1), var(2, 0) - var(2, 1)}};
  SystemSolution s = solve_system(sys);
  ASSERT_EQ(s.branches.size(), 2u);
  EXPECT_EQ(s.branches[0].sample(Coeff()), (std::vector<Coeff>{Coeff(-1), Coeff(-1)}));
  EXPECT_EQ(s.branches[1].sample(Coeff()), (std::vector<Coeff>{Coeff(1), Coeff(1)}));
  for (const auto& b : s.branches) EXPECT_TRUE(satisfies(sys, b));
}

TEST(SolveSystem, EmptySystemIsFree) {
  CoeffSystem sys{{"u", "v", "w"}, {}};
  SystemSolution s = solve_system(sys);
  ASSERT_EQ(s.branches.size(), 1u);
  EXPECT_EQ(s.branches[0].free, (std::vector<bool>{true, true, true}));
}

TEST(SolveSystem, InconsistentHasNoBranch) {
  CoeffSystem sys{{"u"}, {var(1, 0) - cst(1, 1), var(1, 0) - cst(1, 2)}};
  EXPECT_TRUE(solve_system(sys).branches.empty());
}

TEST(SolveSystem, IrrationalPointsAreDroppedWithNote) {
  CoeffSystem sys{{"u"}, {var(1, 0) * var(1, 0) - cst(1, 2)}};
  SystemSolution s = solve_system(sys);
  EXPECT_TRUE(s.branches.empty());
  EXPECT_FALSE(s.notes.empty());
}

TEST(SolveSystem, CapExceeded) {
  CoeffSystem sys;
  sys.unknowns.assign(31, "u");
  EXPECT_THROW(solve_system(sys), CapExceeded);
}

TEST(SolveSystem, NeedsGroebnerBasis) {
  // u^2 + v^2 = 5, u*v = 2: no variable is linear with a constant
  // coefficient; the lex basis has a univariate element in v.
  const std::size_t n = 2;
  SysPoly u = var(n, 0), v = var(n, 1);
  CoeffSystem sys{{"u", "v"}, {u * u + v * v - cst(n, 5), u * v - cst(n, 2)}};
  SystemSolution s = solve_system(sys);
  ASSERT_EQ(s.branches.size(), 4u);
  for (const auto& b : s.branches) {
    EXPECT_TRUE(b.is_point());
    EXPECT_TRUE(satisfies(sys, b));
  }
}

TEST(SolveSystem, RiccatiDegreeOneAnsatz) {
  // dy/dx = y^2 + x*y + x - 1; p = y + a*x + c, g = g0 + g1*x + g2*y.
  const FOODE eq = ode("y^2 + x*y + x - 1", "1");
  DarbouxAnsatz a = darboux_ansatz(eq, 1, Mono{0, 1});
  SystemSolution s = solve_system(a.system);
  ASSERT_EQ(s.branches.size(), 1u);
  DarbouxPair pair = a.pair_at(s.branches[0].sample(Coeff()));
  EXPECT_EQ(pair.p, P("y + 1"));
  EXPECT_EQ(pair.g, P("y + x - 1"));
  EXPECT_EQ(pair.p * pair.g, eq.m());
}

TEST(GroebnerBasis, InconsistentIsUnit) {
  auto g = groebner_basis({var(1, 0), var(1, 0) - cst(1, 1)});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_TRUE(g[0].is_constant());
}

TEST(RationalRoots, Examples) {
  bool other = false;
  EXPECT_EQ(rational_roots({Rat(-1), Rat(0), Rat(1)}, &other), (std::vector<Rat>{Rat(-1), Rat(1)}));
  EXPECT_FALSE(other);
  EXPECT_EQ(rational_roots({Rat(-2), Rat(0), Rat(1)}, &other), std::vector<Rat>{});
  EXPECT_TRUE(other);
  // (2t - 3)(t^2 + 1) t
  EXPECT_EQ(rational_roots({Rat(0), Rat(-3), Rat(2), Rat(-3), Rat(2)}, &other),
            (std::vector<Rat>{Rat(0), make_rat(3, 2)}));
  EXPECT_TRUE(other);
}

// Planted bilinear systems: every Darboux ansatz system built around a
// known pair contains it, and every branch is sound.
TEST(SolveSystem, PlantedDarbouxPairsAreRecovered) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> small(-2, 2);
  int checked = 0;
  for (int trial = 0; trial < 40 && checked < 25; ++trial) {
    // p = y + a*x + c, N = K*p_y + A*p, M = -K*p_x + B*p.
    MPoly p = P("y") + MPoly(Coeff(static_cast<long>(small(rng)))) * P("x") +
              MPoly(Coeff(static_cast<long>(small(rng))));
    MPoly k = testing::random_poly(rng, 1, 2);
    MPoly aa = testing::random_poly(rng, 1, 2);
    MPoly bb = testing::random_poly(rng, 1, 2);
    MPoly n = k * p.dy() + aa * p;
    MPoly m = -(k * p.dx()) + bb * p;
    if (n.is_zero() || !poly_gcd(m, n).is_constant()) continue;
    FOODE eq(m, n);
    p = p.scaled(p.leading_coeff().inverse());
    DarbouxAnsatz a = darboux_ansatz(eq, 1, p.leading_mono());
    SystemSolution s = solve_system(a.system);
    auto g = cofactor(eq, p);
    ASSERT_TRUE(g);
    bool found = false;
    for (const auto& b : s.branches) {
      EXPECT_TRUE(satisfies(a.system, b));
      if (!b.is_point()) {
        found = true;  // a continuum contains every member
        continue;
      }
      DarbouxPair pair = a.pair_at(b.sample(Coeff()));
      found = found || (pair.p == p && pair.g == *g);
    }
    EXPECT_TRUE(found) << render(eq.m()) << " / " << render(eq.n());
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

}  // namespace
}  // namespace liouville
