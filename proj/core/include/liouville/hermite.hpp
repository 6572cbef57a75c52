#pragma once

#include <cstddef>
#include <vector>

#include "liouville/linear.hpp"
#include "liouville/mpoly.hpp"
#include "liouville/ratfunc.hpp"

namespace liouville {

enum class Variable { x, y };

// (num[0] + sum_k l_k * num[k+1]) / den in one variable, with numerator
// affine in parameters l_k and a monic, parameter-free denominator.
struct AffineRational {
  Variable var = Variable::x;
  std::vector<UniPoly> num{UniPoly()};
  UniPoly den{Coeff(1)};

  std::size_t param_count() const { return num.size() - 1; }
  // Parameter-free value; f must not depend on the other variable.
  static AffineRational from(const RatFunc& f, Variable v);
  // Value at l = values (values.size() == param_count()).
  RatFunc evaluate(const Vector& values) const;
  bool is_zero() const;
};

// f = d(rational_part)/dt + log_remainder with log_remainder proper over a
// squarefree denominator. Both parts carry the same parameters as f.
struct HermiteResult {
  AffineRational rational_part;
  AffineRational log_remainder;
};

HermiteResult hermite_reduce(const AffineRational& f);
HermiteResult hermite_reduce(const RatFunc& f, Variable v);

// rows * l = rhs, equivalent to log_remainder == 0.
struct LinearConstraints {
  Matrix rows;
  Vector rhs;
};
LinearConstraints rationality_constraints(const HermiteResult& res);

// Antiderivative with zero integration constant, at parameter values.
// Throws NotRational when the log remainder does not vanish there.
RatFunc integrate_rational_part(const HermiteResult& res, const Vector& values = {});
RatFunc integrate_rational(const RatFunc& f, Variable v);

// Univariate views shared with the solver.
MPoly embed(const UniPoly& p, Variable v);
UniPoly restrict_to(const MPoly& p, Variable v);

}  // namespace liouville
