#pragma once

#include <string>
#include <vector>

#include "liouville/foode.hpp"
#include "liouville/mpoly.hpp"
#include "liouville/polysys.hpp"

namespace liouville {

// D[p] = g * p with p non-constant and primitive-positive.
struct DarbouxPair {
  MPoly p;
  MPoly g;
  friend bool operator==(const DarbouxPair&, const DarbouxPair&) = default;
};

// Coefficient system for D[p] = g*p with p of total degree `degree` and
// leading graded-lex monomial `leading` (coefficient one, larger monomials
// of that degree absent), g of degree <= max(deg M, deg N) - 1. Unknowns:
// cofactor coefficients first, then the open coefficients of p, each in
// descending graded-lex order of its monomial.
struct DarbouxAnsatz {
  CoeffSystem system;
  std::vector<Mono> g_monos;
  std::vector<Mono> p_monos;
  Mono leading;

  // Pair from a point of the system's solution set.
  DarbouxPair pair_at(const std::vector<Coeff>& values) const;
};
DarbouxAnsatz darboux_ansatz(const FOODE& eq, int degree, Mono leading);

int cofactor_degree_bound(const FOODE& eq);

struct DarbouxOptions {
  SystemSolveOptions system;
};

struct DarbouxSearch {
  // Sorted by degree, then by term count, then descending graded-lex.
  std::vector<DarbouxPair> pairs;
  std::vector<std::string> notes;
  int completed_degree = 0;
  bool timed_out = false;
};

// All rational Darboux pairs up to max_degree (irreducible by construction,
// one representative per family). On timeout the pairs of completed degrees
// are returned with timed_out set.
DarbouxSearch find_darboux(const FOODE& eq, int max_degree, const DarbouxOptions& options = {});

// Runs the passes completed_degree + 1 .. degree on an existing search.
void extend_darboux(const FOODE& eq, DarbouxSearch& search, int degree, const DarbouxOptions& options = {});

// Cofactor D[p]/p when p is a Darboux polynomial.
std::optional<MPoly> cofactor(const FOODE& eq, const MPoly& p);

}  // namespace liouville
