#include <benchmark/benchmark.h>

#include <random>

#include "liouville/darboux.hpp"
#include "liouville/hermite.hpp"
#include "liouville/linear.hpp"
#include "liouville/parser.hpp"
#include "liouville/solver.hpp"

namespace {

using namespace liouville;

const char* const kEquations[] = {
    "dy/dx = (3*x^2*y^2 + x^3 + 1)/(4*(x+1)*(x^2-x+1)*y)",
    "dy/dx = y^2 + y*x + x - 1",
    "dy/dx = (x*y - y^2)/(x + 1)",
    "dy/dx = y^2*(y + x - 1)/x^2",
};

void BM_Solve(benchmark::State& state) {
  FOODE eq = parse_foode(kEquations[state.range(0)]);
  SolveConfig cfg;
  cfg.want_first_integral = false;
  for (auto _ : state) benchmark::DoNotOptimize(solve(eq, cfg));
  state.SetLabel(kEquations[state.range(0)]);
}
BENCHMARK(BM_Solve)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_FindDarboux(benchmark::State& state) {
  FOODE eq = parse_foode(kEquations[0]);
  for (auto _ : state) benchmark::DoNotOptimize(find_darboux(eq, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FindDarboux)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_FirstIntegral(benchmark::State& state) {
  FOODE eq = parse_foode(kEquations[1]);
  IntegratingFactor r = parse_integrating_factor("exp(x^2/2 - 2*x) * (y + 1)^-2");
  for (auto _ : state) benchmark::DoNotOptimize(first_integral(eq, r));
}
BENCHMARK(BM_FirstIntegral)->Unit(benchmark::kMillisecond);

void BM_HermiteReduce(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  RatFunc f = parse_rational("(x^5 - 3*x + 7)/((x^2 + 1)^" + std::to_string(k) + " * (x - 2)^" + std::to_string(k) + ")");
  for (auto _ : state) benchmark::DoNotOptimize(hermite_reduce(f, Variable::x));
}
BENCHMARK(BM_HermiteReduce)->DenseRange(1, 4);

void BM_SolveParametric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  Matrix a(n, Vector(n + 2));
  Vector b(n);
  for (auto& row : a)
    for (auto& v : row) v = Coeff(static_cast<long>(d(rng)));
  for (auto& v : b) v = Coeff(static_cast<long>(d(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(solve_parametric(a, b, n + 2));
}
BENCHMARK(BM_SolveParametric)->RangeMultiplier(2)->Range(4, 32);

void BM_PolyGcd(benchmark::State& state) {
  RatFunc g = parse_rational("x^3*y + 2*x*y^2 - y + 1");
  RatFunc a = parse_rational("(x^2 + y^2 - 3)^2 * (x - y)") * g;
  RatFunc b = parse_rational("(x^2 + y^2 - 3) * (x*y + 5)") * g;
  for (auto _ : state) benchmark::DoNotOptimize(poly_gcd(a.num(), b.num()));
}
BENCHMARK(BM_PolyGcd);

}  // namespace

BENCHMARK_MAIN();
