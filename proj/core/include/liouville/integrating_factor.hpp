#pragma once

#include <vector>

#include "liouville/foode.hpp"
#include "liouville/mpoly.hpp"
#include "liouville/ratfunc.hpp"

namespace liouville {

struct Factor {
  MPoly p;          // non-constant, primitive-positive
  Coeff exponent;   // nonzero
  friend bool operator==(const Factor&, const Factor&) = default;
};

// R = exp(r0) * prod p_i^c_i, kept structured; never expanded.
struct IntegratingFactor {
  RatFunc r0;
  std::vector<Factor> factors;

  // Merges repeated bases, drops zero exponents and constant bases, sorts
  // bases in ascending graded-lex order.
  IntegratingFactor& canonicalize();
  friend bool operator==(const IntegratingFactor&, const IntegratingFactor&) = default;
};

// True when a and b agree up to a nonzero constant multiple: r0 differs by
// an additive constant and the products agree over a common coprime basis.
bool equivalent_up_to_scale(const IntegratingFactor& a, const IntegratingFactor& b);

// Pairwise coprime polynomials such that every input is a constant times a
// product of powers of them. Inputs must be nonzero.
std::vector<MPoly> coprime_basis(const std::vector<MPoly>& polys);

}  // namespace liouville
