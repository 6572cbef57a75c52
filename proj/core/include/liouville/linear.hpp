#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "liouville/coeff.hpp"

namespace liouville {

using Vector = std::vector<Coeff>;
using Matrix = std::vector<Vector>;  // row-major

// { particular + sum_j t_j * basis[j] }.
//
// Canonical form: basis[j] has a one at free_columns[j] and zeros at every
// other free column, and particular is zero at every free column. Setting
// the free variables to zero therefore selects `particular`.
struct AffineSolutionSpace {
  Vector particular;
  std::vector<Vector> basis;
  std::vector<std::size_t> free_columns;
  std::vector<std::string> variable_names;

  std::size_t dimension() const { return basis.size(); }
  std::size_t size() const { return particular.size(); }
  // particular + sum_j t[j] * basis[j]
  Vector point(const Vector& t) const;
  // True when v lies in the space (exact).
  bool contains(const Vector& v) const;
};

// Exact solution of A v = b over Q(b). Fraction-free (Bareiss) forward
// elimination, then back-substitution. Returns nullopt when inconsistent.
// `columns` gives the unknown count when A has no rows.
std::optional<AffineSolutionSpace> solve_parametric(const Matrix& a, const Vector& b, std::size_t columns,
                                                    std::vector<std::string> names = {});

// The subspace additionally satisfying extra * v = rhs; nullopt when empty.
std::optional<AffineSolutionSpace> intersect_constraints(const AffineSolutionSpace& space, const Matrix& extra,
                                                         const Vector& rhs);

// Brings an arbitrary parametrization into the canonical form above.
AffineSolutionSpace canonicalize(AffineSolutionSpace space);

// A v - b, exact.
Vector residual(const Matrix& a, const Vector& v, const Vector& b);

}  // namespace liouville
