#pragma once

#include "liouville/mpoly.hpp"
#include "liouville/ratfunc.hpp"

namespace liouville {

// dy/dx = M/N with M, N coprime. The pair is normalized jointly: the
// coefficients of M and N together have content one, and N has a positive
// leading coefficient.
class FOODE {
 public:
  // Normalizes; throws ZeroDenominatorError when n is zero.
  FOODE(const MPoly& m, const MPoly& n);
  explicit FOODE(const RatFunc& rhs) : FOODE(rhs.num(), rhs.den()) {}

  const MPoly& m() const { return m_; }
  const MPoly& n() const { return n_; }
  // max(deg M, deg N)
  int degree() const;
  RatFunc rhs() const { return RatFunc(m_, n_); }
  // True when any coefficient depends on the symbolic parameter.
  bool is_parametric() const { return !m_.is_rational() || !n_.is_rational(); }

  friend bool operator==(const FOODE& a, const FOODE& b) { return a.m_ == b.m_ && a.n_ == b.n_; }

 private:
  MPoly m_;
  MPoly n_;
};

// D[f] = N f_x + M f_y.
MPoly d_operator(const FOODE& eq, const MPoly& f);
RatFunc d_operator(const FOODE& eq, const RatFunc& f);

// -(N_x + M_y), the right-hand side of D[R]/R for an integrating factor R.
MPoly divergence_source(const FOODE& eq);

// Exact value at a point; PoleError when a denominator vanishes.
Coeff eval_at(const MPoly& f, const Coeff& x0, const Coeff& y0);
Coeff eval_at(const RatFunc& f, const Coeff& x0, const Coeff& y0);

}  // namespace liouville
