#include "liouville/foode.hpp"

#include <algorithm>

#include "liouville/errors.hpp"

namespace liouville {

FOODE::FOODE(const MPoly& m, const MPoly& n) {
  if (n.is_zero()) throw ZeroDenominatorError("equation has a zero denominator N");
  RatFunc r(m, n);
  std::vector<Coeff> coeffs;
  for (const auto& [mono, c] : r.num().terms()) coeffs.push_back(c);
  for (const auto& [mono, c] : r.den().terms()) coeffs.push_back(c);
  const Coeff s = joint_normalizing_scale(coeffs, r.den().leading_coeff());
  m_ = r.num().scaled(s);
  n_ = r.den().scaled(s);
}

int FOODE::degree() const { return std::max(m_.total_degree(), n_.total_degree()); }

MPoly d_operator(const FOODE& eq, const MPoly& f) { return eq.n() * f.dx() + eq.m() * f.dy(); }

RatFunc d_operator(const FOODE& eq, const RatFunc& f) {
  return RatFunc(eq.n()) * f.dx() + RatFunc(eq.m()) * f.dy();
}

MPoly divergence_source(const FOODE& eq) { return -(eq.n().dx() + eq.m().dy()); }

Coeff eval_at(const MPoly& f, const Coeff& x0, const Coeff& y0) { return f.eval(x0, y0); }

Coeff eval_at(const RatFunc& f, const Coeff& x0, const Coeff& y0) { return f.eval(x0, y0); }

}  // namespace liouville
