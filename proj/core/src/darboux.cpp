#include "liouville/darboux.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace liouville {

namespace {

using SysTerms = std::map<Mono, SysPoly, GrlexDescending>;

void accumulate(SysTerms& t, Mono m, const SysPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = t.emplace(m, c);
  if (!inserted) it->second += c;
}

std::vector<Mono> monomials_up_to(int degree) {
  std::vector<Mono> out;
  for (int d = degree; d >= 0; --d)
    for (int i = d; i >= 0; --i) out.push_back({i, d - i});
  return out;
}

std::string mono_label(const char* prefix, Mono m) {
  return std::string(prefix) + "[" + std::to_string(m.dx) + "," + std::to_string(m.dy) + "]";
}

bool sort_before(const DarbouxPair& a, const DarbouxPair& b) {
  const int da = a.p.total_degree(), db = b.p.total_degree();
  if (da != db) return da < db;
  if (a.p.size() != b.p.size()) return a.p.size() < b.p.size();
  return compare(a.p, b.p) > 0;
}

}  // namespace

int cofactor_degree_bound(const FOODE& eq) { return std::max(eq.degree() - 1, 0); }

DarbouxAnsatz darboux_ansatz(const FOODE& eq, int degree, Mono leading) {
  if (leading.degree() != degree) throw std::invalid_argument("leading monomial must have the ansatz degree");
  DarbouxAnsatz a;
  a.leading = leading;
  for (Mono m : monomials_up_to(cofactor_degree_bound(eq))) a.g_monos.push_back(m);
  for (Mono m : monomials_up_to(degree))
    if (grlex(m, leading) < 0) a.p_monos.push_back(m);
  const std::size_t ng = a.g_monos.size();
  const std::size_t n = ng + a.p_monos.size();
  for (Mono m : a.g_monos) a.system.unknowns.push_back(mono_label("g", m));
  for (Mono m : a.p_monos) a.system.unknowns.push_back(mono_label("p", m));

  SysTerms p, g;
  p.emplace(leading, SysPoly(n, Coeff(1)));
  for (std::size_t i = 0; i < a.p_monos.size(); ++i) p.emplace(a.p_monos[i], SysPoly::variable(n, ng + i));
  for (std::size_t i = 0; i < ng; ++i) g.emplace(a.g_monos[i], SysPoly::variable(n, i));

  // D[p] - g*p
  SysTerms r;
  for (const auto& [u, c] : p) {
    if (u.dx > 0)
      for (const auto& [w, k] : eq.n().terms())
        accumulate(r, Mono{u.dx - 1, u.dy} * w, c.scaled(k * Coeff(static_cast<long>(u.dx))));
    if (u.dy > 0)
      for (const auto& [w, k] : eq.m().terms())
        accumulate(r, Mono{u.dx, u.dy - 1} * w, c.scaled(k * Coeff(static_cast<long>(u.dy))));
  }
  for (const auto& [w, cg] : g)
    for (const auto& [u, cp] : p) accumulate(r, w * u, -(cg * cp));
  // Stage by homogeneous level from the top: the top level is bilinear in
  // the leading parts of p and g, every lower level is linear in the next
  // parts once the levels above are fixed.
  const int top = degree + cofactor_degree_bound(eq);
  for (auto& [m, c] : r) {
    if (c.is_zero()) continue;
    a.system.equations.push_back(std::move(c));
    a.system.stages.push_back(top - m.degree());
  }
  return a;
}

DarbouxPair DarbouxAnsatz::pair_at(const std::vector<Coeff>& values) const {
  const std::size_t ng = g_monos.size();
  DarbouxPair out;
  out.p.add_term(leading, Coeff(1));
  for (std::size_t i = 0; i < p_monos.size(); ++i) out.p.add_term(p_monos[i], values[ng + i]);
  for (std::size_t i = 0; i < ng; ++i) out.g.add_term(g_monos[i], values[i]);
  return out;
}

std::optional<MPoly> cofactor(const FOODE& eq, const MPoly& p) {
  if (p.is_zero()) return std::nullopt;
  return divide_exact(d_operator(eq, p), p);
}

void extend_darboux(const FOODE& eq, DarbouxSearch& search, int degree, const DarbouxOptions& options) {
  if (degree < 1) throw std::invalid_argument("max_degree must be at least 1");
  try {
    for (int d = search.completed_degree + 1; d <= degree; ++d) {
      std::vector<DarbouxPair> found;
      auto accept = [&](DarbouxPair pair) {
        if (pair.p.total_degree() != d) return false;
        const Coeff s = pair.p.normalizing_scale();
        pair.p = pair.p.scaled(s);
        for (const auto& q : search.pairs)
          if (divide_exact(pair.p, q.p)) return false;
        for (const auto& q : found)
          if (q.p == pair.p) return false;
        // Literal identity check before anything leaves the search.
        if (d_operator(eq, pair.p) != pair.g * pair.p) return false;
        found.push_back(std::move(pair));
        return true;
      };
      for (int i = d; i >= 0; --i) {
        options.system.deadline.check();
        DarbouxAnsatz a = darboux_ansatz(eq, d, Mono{i, d - i});
        SystemSolution sol = solve_system(a.system, options.system);
        for (auto& note : sol.notes) search.notes.push_back("degree " + std::to_string(d) + ": " + note);
        for (const SolutionBranch& b : sol.branches) {
          if (b.is_point()) {
            accept(a.pair_at(b.sample(Coeff())));
            continue;
          }
          bool taken = accept(a.pair_at(b.sample(Coeff(0)))) || accept(a.pair_at(b.sample(Coeff(1))));
          search.notes.push_back("degree " + std::to_string(d) + ": continuum of Darboux polynomials " +
                                 b.to_string(a.system.unknowns) + (taken ? ", one member kept" : ", no new member"));
        }
      }
      std::sort(found.begin(), found.end(), sort_before);
      for (auto& f : found) search.pairs.push_back(std::move(f));
      search.completed_degree = d;
    }
  } catch (const Timeout&) {
    search.timed_out = true;
    search.notes.push_back("darboux search timed out after degree " + std::to_string(search.completed_degree));
  }
}

DarbouxSearch find_darboux(const FOODE& eq, int max_degree, const DarbouxOptions& options) {
  DarbouxSearch s;
  extend_darboux(eq, s, max_degree, options);
  return s;
}

}  // namespace liouville
