#include "liouville/hermite.hpp"

#include <stdexcept>

#include "liouville/errors.hpp"

namespace liouville {

MPoly embed(const UniPoly& p, Variable v) { return v == Variable::x ? MPoly::from_x(p) : MPoly::from_y(p); }

UniPoly restrict_to(const MPoly& p, Variable v) { return v == Variable::x ? p.as_x() : p.as_y(); }

AffineRational AffineRational::from(const RatFunc& f, Variable v) {
  AffineRational out;
  out.var = v;
  UniPoly den = restrict_to(f.den(), v);
  Coeff inv = den.lead().inverse();
  out.den = den.scaled(inv);
  out.num = {restrict_to(f.num(), v).scaled(inv)};
  return out;
}

RatFunc AffineRational::evaluate(const Vector& values) const {
  if (values.size() != param_count()) throw std::invalid_argument("parameter count mismatch");
  UniPoly n = num[0];
  for (std::size_t k = 0; k < values.size(); ++k)
    if (!values[k].is_zero()) n = n + num[k + 1].scaled(values[k]);
  return RatFunc(embed(n, var), embed(den, var));
}

bool AffineRational::is_zero() const {
  for (const auto& p : num)
    if (!p.is_zero()) return false;
  return true;
}

namespace {

struct Reduced {
  UniPoly rational;   // over the shared rational denominator
  UniPoly remainder;  // over the shared squarefree denominator
};

// Hermite reduction of a / q for monic q, in the quadratic (Mack) form:
// the result is linear in a for fixed q.
Reduced reduce_one(const UniPoly& a, const UniPoly& q, const UniPoly& g0) {
  auto [poly_part, proper] = UniPoly::divmod(a, q);
  UniPoly dm = gcd(q, q.derivative());
  const UniPoly ds = UniPoly::exact_div(q, dm);
  UniPoly num = proper;
  UniPoly rational = poly_part.integral() * g0;
  while (dm.degree() > 0) {
    const UniPoly dm2 = gcd(dm, dm.derivative());
    const UniPoly dms = UniPoly::exact_div(dm, dm2);
    const UniPoly coef = -UniPoly::exact_div(ds * dm.derivative(), dm);
    auto [b, c] = solve_diophantine(coef, dms, num);
    num = c - UniPoly::exact_div(b.derivative() * ds, dms);
    rational = rational + b * UniPoly::exact_div(g0, dm);
    dm = dm2;
  }
  return {rational, num};
}

}  // namespace

HermiteResult hermite_reduce(const AffineRational& f) {
  const UniPoly& q = f.den;
  const UniPoly g0 = gcd(q, q.derivative());
  const UniPoly ds = UniPoly::exact_div(q, g0);
  HermiteResult out;
  out.rational_part.var = out.log_remainder.var = f.var;
  out.rational_part.den = g0.degree() < 0 ? UniPoly(Coeff(1)) : g0;
  out.log_remainder.den = ds;
  out.rational_part.num.clear();
  out.log_remainder.num.clear();
  for (const UniPoly& a : f.num) {
    Reduced r = reduce_one(a, q, out.rational_part.den);
    out.rational_part.num.push_back(std::move(r.rational));
    out.log_remainder.num.push_back(std::move(r.remainder));
  }
  return out;
}

HermiteResult hermite_reduce(const RatFunc& f, Variable v) { return hermite_reduce(AffineRational::from(f, v)); }

LinearConstraints rationality_constraints(const HermiteResult& res) {
  const AffineRational& h = res.log_remainder;
  const std::size_t k = h.param_count();
  int top = -1;
  for (const auto& p : h.num) top = std::max(top, p.degree());
  LinearConstraints out;
  for (int i = 0; i <= top; ++i) {
    Vector row(k);
    bool nonzero = false;
    for (std::size_t j = 0; j < k; ++j) {
      row[j] = h.num[j + 1].coeff(i);
      nonzero = nonzero || !row[j].is_zero();
    }
    Coeff rhs = -h.num[0].coeff(i);
    if (!nonzero && rhs.is_zero()) continue;
    out.rows.push_back(std::move(row));
    out.rhs.push_back(std::move(rhs));
  }
  return out;
}

RatFunc integrate_rational_part(const HermiteResult& res, const Vector& values) {
  Vector v = values;
  if (v.empty()) v.resize(res.rational_part.param_count());
  if (!res.log_remainder.evaluate(v).is_zero()) throw NotRational("antiderivative has logarithmic terms");
  return res.rational_part.evaluate(v);
}

RatFunc integrate_rational(const RatFunc& f, Variable v) { return integrate_rational_part(hermite_reduce(f, v)); }

}  // namespace liouville
