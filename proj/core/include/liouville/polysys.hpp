#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liouville/coeff.hpp"
#include "liouville/deadline.hpp"

namespace liouville {

// Polynomial in unknowns u_0, ..., u_{n-1} over Q(b). Terms are kept in
// descending lexicographic order with u_0 > u_1 > ...
class SysPoly {
 public:
  using Exponents = std::vector<int>;
  struct LexDescending {
    bool operator()(const Exponents& a, const Exponents& b) const { return a > b; }
  };
  using TermMap = std::map<Exponents, Coeff, LexDescending>;

  SysPoly() = default;
  SysPoly(std::size_t nvars, const Coeff& c);
  static SysPoly variable(std::size_t nvars, std::size_t i);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Coeff constant_term() const;
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Coeff& leading_coeff() const { return terms_.begin()->second; }
  int degree_in(std::size_t var) const;
  int total_degree() const;
  std::vector<bool> support() const;  // which unknowns occur

  void add_term(const Exponents& e, const Coeff& c);
  SysPoly operator-() const;
  SysPoly& operator+=(const SysPoly& o);
  SysPoly& operator-=(const SysPoly& o);
  friend SysPoly operator+(SysPoly a, const SysPoly& b) { return a += b; }
  friend SysPoly operator-(SysPoly a, const SysPoly& b) { return a -= b; }
  friend SysPoly operator*(const SysPoly& a, const SysPoly& b);
  SysPoly scaled(const Coeff& s) const;
  SysPoly monic() const;
  friend bool operator==(const SysPoly& a, const SysPoly& b) { return a.terms_ == b.terms_; }
  friend std::strong_ordering compare(const SysPoly& a, const SysPoly& b);

  // Coefficients of powers of u_var (index = power), each free of u_var.
  std::vector<SysPoly> coefficients_in(std::size_t var) const;
  SysPoly substitute(std::size_t var, const SysPoly& value) const;
  // Value with every unknown replaced (values.size() == nvars()).
  Coeff evaluate(const std::vector<Coeff>& values) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  TermMap terms_;
};

struct CoeffSystem {
  std::vector<std::string> unknowns;
  std::vector<SysPoly> equations;
  // Optional stage per equation (empty: all in stage 0). Stages are solved
  // in ascending order, each after substituting the earlier solutions.
  std::vector<int> stages;
};

// One solution component. Free unknowns map to themselves; every other
// unknown maps to an expression in the free ones.
struct SolutionBranch {
  std::vector<SysPoly> values;
  std::vector<bool> free;

  bool is_point() const;
  // Values after setting every free unknown to `sample`.
  std::vector<Coeff> sample(const Coeff& sample) const;
  std::string to_string(const std::vector<std::string>& names) const;
};

struct SystemSolveOptions {
  std::size_t max_unknowns = 30;
  Deadline deadline;
};

struct SystemSolution {
  std::vector<SolutionBranch> branches;
  // Components that were dropped (irrational points, curves without a
  // rational parametrization found by the solver).
  std::vector<std::string> notes;
};

// All rational solutions as finitely many branches, sorted and
// deduplicated. Throws CapExceeded or Timeout.
SystemSolution solve_system(const CoeffSystem& sys, const SystemSolveOptions& options = {});

// Reduced lexicographic Groebner basis (monic, sorted). {1} when
// inconsistent.
std::vector<SysPoly> groebner_basis(std::vector<SysPoly> polys, const Deadline& deadline = {});

// Rational roots of a univariate polynomial with rational coefficients,
// ascending. `has_other_roots` reports irrational or complex roots.
std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs, bool* has_other_roots = nullptr);

}  // namespace liouville
