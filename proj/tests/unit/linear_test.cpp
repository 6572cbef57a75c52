#include <gtest/gtest.h>

#include <random>

#include "liouville/linear.hpp"
#include "test_util.hpp"

namespace liouville {
namespace {

using testing::random_rat;

Vector vec(std::initializer_list<long> v) {
  Vector out;
  for (long x : v) out.emplace_back(x);
  return out;
}

bool all_zero(const Vector& v) {
  for (const auto& c : v)
    if (!c.is_zero()) return false;
  return true;
}

TEST(SolveParametric, Identity) {
  auto s = solve_parametric({vec({1, 0}), vec({0, 1})}, vec({1, 2}), 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular, vec({1, 2}));
  EXPECT_EQ(s->dimension(), 0u);
}

TEST(SolveParametric, InconsistentScalar) {
  EXPECT_FALSE(solve_parametric({vec({0})}, vec({1}), 1));
}

TEST(SolveParametric, NoRowsLeavesEverythingFree) {
  auto s = solve_parametric({}, {}, 3);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->dimension(), 3u);
  EXPECT_EQ(s->particular, vec({0, 0, 0}));
}

// Vanishing log terms of the two candidate r(x) and equality of their
// rational parts for the Abel example, unknowns (c1, c2, c3).
Matrix abel_rows() { return {vec({1, 0, 0}), vec({1, 2, 2}), vec({0, 1, 1}), vec({0, 1, 1})}; }
Vector abel_rhs() { return vec({0, -6, -3, -3}); }

TEST(SolveParametric, AbelExponentConstraints) {
  auto s = solve_parametric(abel_rows(), abel_rhs(), 3, {"c1", "c2", "c3"});
  ASSERT_TRUE(s);
  // c1 = 0, c2 = -c3 - 3, c3 free
  EXPECT_EQ(s->particular, vec({0, -3, 0}));
  ASSERT_EQ(s->dimension(), 1u);
  EXPECT_EQ(s->free_columns, std::vector<std::size_t>{2});
  EXPECT_EQ(s->basis[0], vec({0, -1, 1}));
}

TEST(IntersectConstraints, FixesLastExponent) {
  auto s = solve_parametric(abel_rows(), abel_rhs(), 3);
  ASSERT_TRUE(s);
  auto t = intersect_constraints(*s, {vec({0, 0, 1})}, vec({-1}));
  ASSERT_TRUE(t);
  EXPECT_EQ(t->dimension(), 0u);
  EXPECT_EQ(t->particular, vec({0, -2, -1}));
}

TEST(IntersectConstraints, EmptyConstraintSetIsIdentity) {
  auto s = solve_parametric(abel_rows(), abel_rhs(), 3);
  ASSERT_TRUE(s);
  auto t = intersect_constraints(*s, {}, {});
  ASSERT_TRUE(t);
  EXPECT_EQ(t->particular, s->particular);
  EXPECT_EQ(t->basis, s->basis);
}

TEST(IntersectConstraints, Contradiction) {
  auto s = solve_parametric({vec({1})}, vec({1}), 1);
  ASSERT_TRUE(s);
  EXPECT_FALSE(intersect_constraints(*s, {vec({1})}, vec({2})));
}

TEST(SolveParametric, ParameterEntries) {
  const Coeff b = Coeff::parameter();
  // b*u = 1, u + v = 0
  auto s = solve_parametric({{b, Coeff()}, {Coeff(1), Coeff(1)}}, {Coeff(1), Coeff()}, 2);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->particular[0], b.inverse());
  EXPECT_EQ(s->particular[1], -b.inverse());
}

// Random systems built around a planted solution; rank deficiency is forced
// by appending combinations of earlier rows.
TEST(SolveParametric, PlantedSolutionProperty) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-3, 3);
  std::uniform_int_distribution<int> dim(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = dim(rng);
    const std::size_t rows = dim(rng);
    Vector planted(n);
    for (auto& c : planted) c = Coeff(random_rat(rng));
    Matrix a;
    for (std::size_t i = 0; i < rows; ++i) {
      Vector row(n);
      for (auto& c : row) c = Coeff(static_cast<long>(small(rng)));
      a.push_back(row);
    }
    if (rows >= 2) {
      Vector combo(n);
      for (std::size_t j = 0; j < n; ++j) combo[j] = a[0][j] * Coeff(2) - a[1][j];
      a.push_back(combo);
    }
    Vector b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      Coeff acc;
      for (std::size_t j = 0; j < n; ++j) acc += a[i][j] * planted[j];
      b[i] = acc;
    }
    auto s = solve_parametric(a, b, n);
    ASSERT_TRUE(s) << "trial " << trial;
    EXPECT_TRUE(s->contains(planted)) << "trial " << trial;
    EXPECT_TRUE(all_zero(residual(a, s->particular, b)));
    Vector t(s->dimension());
    for (auto& c : t) c = Coeff(random_rat(rng));
    EXPECT_TRUE(all_zero(residual(a, s->point(t), b)));
    // Basis vectors solve the homogeneous system and are already canonical.
    for (const auto& v : s->basis) EXPECT_TRUE(all_zero(residual(a, v, Vector(a.size()))));
    auto c = canonicalize(*s);
    EXPECT_EQ(c.particular, s->particular);
    EXPECT_EQ(c.basis, s->basis);
  }
}

}  // namespace
}  // namespace liouville
