#include "liouville/integrating_factor.hpp"

#include <algorithm>

namespace liouville {

IntegratingFactor& IntegratingFactor::canonicalize() {
  std::vector<Factor> merged;
  for (const Factor& f : factors) {
    if (f.p.is_constant() || f.exponent.is_zero()) continue;
    MPoly p = f.p.normalized();
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) { return g.p == p; });
    if (it == merged.end()) {
      merged.push_back({std::move(p), f.exponent});
    } else {
      it->exponent += f.exponent;
    }
  }
  std::erase_if(merged, [](const Factor& f) { return f.exponent.is_zero(); });
  std::sort(merged.begin(), merged.end(), [](const Factor& a, const Factor& b) { return compare(a.p, b.p) < 0; });
  factors = std::move(merged);
  return *this;
}

std::vector<MPoly> coprime_basis(const std::vector<MPoly>& polys) {
  std::vector<MPoly> basis;
  for (const MPoly& p : polys)
    if (!p.is_constant()) basis.push_back(p.normalized());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < basis.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < basis.size() && !changed; ++j) {
        MPoly g = poly_gcd(basis[i], basis[j]);
        if (g.is_constant()) continue;
        MPoly a = *divide_exact(basis[i], g);
        MPoly b = *divide_exact(basis[j], g);
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(j));
        basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(i));
        for (MPoly* q : {&a, &b, &g})
          if (!q->is_constant()) basis.push_back(q->normalized());
        changed = true;
      }
    }
  }
  std::sort(basis.begin(), basis.end(), [](const MPoly& a, const MPoly& b) { return compare(a, b) < 0; });
  return basis;
}

namespace {

// Exponent vector of prod f.p^f.exponent over a coprime basis.
std::vector<Coeff> exponents_over(const std::vector<MPoly>& basis, const std::vector<Factor>& factors) {
  std::vector<Coeff> e(basis.size());
  for (const Factor& f : factors) {
    MPoly rest = f.p;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      long mult = 0;
      while (auto q = divide_exact(rest, basis[k])) {
        rest = std::move(*q);
        ++mult;
      }
      if (mult) e[k] += f.exponent * Coeff(mult);
    }
  }
  return e;
}

}  // namespace

bool equivalent_up_to_scale(const IntegratingFactor& a, const IntegratingFactor& b) {
  RatFunc d = a.r0 - b.r0;
  if (!d.dx().is_zero() || !d.dy().is_zero()) return false;
  std::vector<MPoly> all;
  for (const Factor& f : a.factors) all.push_back(f.p);
  for (const Factor& f : b.factors) all.push_back(f.p);
  std::vector<MPoly> basis = coprime_basis(all);
  return exponents_over(basis, a.factors) == exponents_over(basis, b.factors);
}

}  // namespace liouville
