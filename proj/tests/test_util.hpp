#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "liouville/foode.hpp"
#include "liouville/mpoly.hpp"
#include "liouville/parser.hpp"
#include "liouville/render.hpp"
#include "liouville/solver.hpp"

#include <ostream>

namespace liouville {

inline void PrintTo(const MPoly& p, std::ostream* os) { *os << render(p); }
inline void PrintTo(const RatFunc& f, std::ostream* os) { *os << render(f); }
inline void PrintTo(const Coeff& c, std::ostream* os) { *os << render(c); }
inline void PrintTo(const IntegratingFactor& r, std::ostream* os) { *os << render(r); }

}  // namespace liouville

namespace liouville::testing {

inline MPoly P(const std::string& s, const ParseOptions& o = {}) {
  RatFunc r = parse_rational(s, o);
  if (!r.is_polynomial()) throw std::invalid_argument("not a polynomial: " + s);
  return r.num();
}

inline RatFunc F(const std::string& s, const ParseOptions& o = {}) { return parse_rational(s, o); }

inline FOODE ode(const std::string& m, const std::string& n) { return FOODE(P(m), P(n)); }

// Dense random polynomial with small integer coefficients.
inline MPoly random_poly(std::mt19937& rng, int max_degree, int coeff_range = 3, double density = 0.6) {
  std::uniform_int_distribution<int> coeff(-coeff_range, coeff_range);
  std::bernoulli_distribution keep(density);
  MPoly p;
  for (int d = 0; d <= max_degree; ++d)
    for (int i = 0; i <= d; ++i)
      if (keep(rng)) p.add_term({i, d - i}, Coeff(static_cast<long>(coeff(rng))));
  return p;
}

// A FOODE with a known Darboux polynomial p: N = K*p_y + A*p and
// M = -K*p_x + B*p give D[p] = (A*p_x + B*p_y)*p. p is linear, or linear in
// one variable with a constant coefficient, hence irreducible. Retries until
// M and N are coprime.
struct PlantedEquation {
  FOODE eq;
  MPoly p;  // primitive-positive
};

inline PlantedEquation planted_darboux(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> small(-2, 2);
  std::bernoulli_distribution coin(0.5);
  auto c = [&] { return Coeff(static_cast<long>(small(rng))); };
  for (;;) {
    MPoly p;
    if (degree == 1) {
      p = MPoly(c()) * MPoly::x() + MPoly(c()) * MPoly::y() + MPoly(c());
    } else {
      MPoly t = MPoly::x(), s = MPoly::y();
      if (coin(rng)) std::swap(t, s);
      MPoly q = MPoly(c());
      for (int k = 1; k <= degree; ++k) q += MPoly(k == degree ? Coeff(1) : c()) * t.pow(static_cast<unsigned>(k));
      p = s + q;
    }
    if (p.total_degree() != degree) continue;
    MPoly k = random_poly(rng, 1, 2), a = random_poly(rng, 1, 2), b = random_poly(rng, 1, 2);
    MPoly n = k * p.dy() + a * p;
    MPoly m = -(k * p.dx()) + b * p;
    if (n.is_zero() || m.is_zero() || !poly_gcd(m, n).is_constant()) continue;
    return {FOODE(m, n), p.normalized()};
  }
}

// Random univariate rational function in x with a monic, possibly repeated,
// denominator.
inline RatFunc random_univariate(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3);
  std::uniform_int_distribution<int> small(-3, 3);
  auto poly = [&](int d, bool monic) {
    MPoly p;
    for (int i = 0; i <= d; ++i) p.add_term({i, 0}, Coeff(static_cast<long>(small(rng))));
    if (monic) p.add_term({d + 1, 0}, Coeff(1));
    return p;
  };
  MPoly den = poly(deg(rng) % 2, true).pow(1 + deg(rng) % 2) * poly(deg(rng) % 2, true);
  return RatFunc(poly(deg(rng) + 1, false), den);
}

inline Rat random_rat(std::mt19937& rng, int num_range = 9, int den_range = 7) {
  std::uniform_int_distribution<int> n(-num_range, num_range);
  std::uniform_int_distribution<int> d(1, den_range);
  return make_rat(n(rng), d(rng));
}

// Floating-point finite-difference oracle for (R N)_x + (R M)_y = 0, independent
// of the symbolic identity used by the verifier. R is evaluated numerically from
// its structured form at rational points away from poles and where fractional
// powers are real. Central differences with step h are compared against the
// truncation bound h^2/6 * |third derivative| (estimated on a wider stencil)
// plus a rounding term.
struct NumericOutcome {
  int points = 0;
  int failures = 0;
  long double worst = 0;  // largest |divergence| / bound
};

inline NumericOutcome numeric_divergence_check(const FOODE& eq, const IntegratingFactor& r, std::mt19937& rng,
                                               int wanted = 20) {
  using LD = long double;
  auto to_ld = [](const Coeff& c) { return static_cast<LD>(c.rational().get_d()); };
  auto ev = [&](const MPoly& p, LD x, LD y) {
    LD acc = 0;
    for (const auto& [m, c] : p.terms()) acc += to_ld(c) * std::pow(x, LD(m.dx)) * std::pow(y, LD(m.dy));
    return acc;
  };
  auto value = [&](LD x, LD y, int which) {
    LD rv = std::exp(ev(r.r0.num(), x, y) / ev(r.r0.den(), x, y));
    for (const Factor& f : r.factors) rv *= std::pow(ev(f.p, x, y), to_ld(f.exponent));
    return rv * (which == 0 ? ev(eq.n(), x, y) : ev(eq.m(), x, y));
  };
  NumericOutcome out;
  std::uniform_int_distribution<int> num(-30, 30);
  const LD h = 1e-4L, wide = 2e-2L;
  for (int tries = 0; tries < 4000 && out.points < wanted; ++tries) {
    const LD x0 = LD(num(rng)) / 10, y0 = LD(num(rng)) / 10;
    bool ok = std::abs(ev(r.r0.den(), x0, y0)) > 0.2L;
    for (const Factor& f : r.factors) {
      const LD v = ev(f.p, x0, y0);
      ok = ok && std::abs(v) > 0.2L && (is_integer(f.exponent.rational()) || v > 0.2L);
    }
    if (!ok || std::abs(ev(r.r0.num(), x0, y0) / ev(r.r0.den(), x0, y0)) > 40) continue;
    auto along = [&](int which, bool along_x) {
      return [&, which, along_x](LD t) { return along_x ? value(x0 + t, y0, which) : value(x0, y0 + t, which); };
    };
    auto d1 = [&](int which, bool along_x) {
      auto f = along(which, along_x);
      return (f(h) - f(-h)) / (2 * h);
    };
    auto d3 = [&](int which, bool along_x) {
      auto f = along(which, along_x);
      return (f(2 * wide) - 2 * f(wide) + 2 * f(-wide) - f(-2 * wide)) / (2 * wide * wide * wide);
    };
    const LD div = d1(0, true) + d1(1, false);
    const LD scale = std::abs(value(x0, y0, 0)) + std::abs(value(x0, y0, 1));
    const LD bound = 4 * (h * h / 6) * (std::abs(d3(0, true)) + std::abs(d3(1, false))) + 1e-14L * (1 + scale) / h;
    ++out.points;
    const LD ratio = std::abs(div) / bound;
    out.worst = std::max(out.worst, ratio);
    if (ratio > 1) ++out.failures;
  }
  return out;
}

}  // namespace liouville::testing
