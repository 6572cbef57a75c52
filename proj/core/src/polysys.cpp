#include "liouville/polysys.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "liouville/render.hpp"
#include "liouville/upoly.hpp"

namespace liouville {

// SysPoly ---------------------------------------------------------------

SysPoly::SysPoly(std::size_t nvars, const Coeff& c) : nvars_(nvars) {
  if (!c.is_zero()) terms_.emplace(Exponents(nvars, 0), c);
}

SysPoly SysPoly::variable(std::size_t nvars, std::size_t i) {
  SysPoly p(nvars, Coeff());
  Exponents e(nvars, 0);
  e.at(i) = 1;
  p.terms_.emplace(std::move(e), Coeff(1));
  return p;
}

bool SysPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(),
                                                               terms_.begin()->first.end(),
                                                               [](int v) { return v == 0; }));
}

Coeff SysPoly::constant_term() const {
  auto it = terms_.find(Exponents(nvars_, 0));
  return it == terms_.end() ? Coeff() : it->second;
}

int SysPoly::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int SysPoly::total_degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int v : e) s += v;
    d = std::max(d, s);
  }
  return d;
}

std::vector<bool> SysPoly::support() const {
  std::vector<bool> s(nvars_, false);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < nvars_; ++i)
      if (e[i] > 0) s[i] = true;
  return s;
}

void SysPoly::add_term(const Exponents& e, const Coeff& c) {
  if (c.is_zero()) return;
  if (nvars_ == 0 && terms_.empty()) nvars_ = e.size();
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

SysPoly SysPoly::operator-() const {
  SysPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

SysPoly& SysPoly::operator+=(const SysPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

SysPoly& SysPoly::operator-=(const SysPoly& o) {
  if (nvars_ == 0) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

SysPoly operator*(const SysPoly& a, const SysPoly& b) {
  SysPoly r(std::max(a.nvars_, b.nvars_), Coeff());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      SysPoly::Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

SysPoly SysPoly::scaled(const Coeff& s) const {
  if (s.is_zero()) return SysPoly(nvars_, Coeff());
  SysPoly r = *this;
  for (auto& [e, c] : r.terms_) c *= s;
  return r;
}

SysPoly SysPoly::monic() const { return is_zero() ? *this : scaled(leading_coeff().inverse()); }

std::strong_ordering compare(const SysPoly& a, const SysPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first > ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
    auto c = compare(ia->second, ib->second);
    if (c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::vector<SysPoly> SysPoly::coefficients_in(std::size_t var) const {
  std::vector<SysPoly> out(static_cast<std::size_t>(degree_in(var)) + 1, SysPoly(nvars_, Coeff()));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f[var] = 0;
    out[static_cast<std::size_t>(e[var])].add_term(f, c);
  }
  return out;
}

SysPoly SysPoly::substitute(std::size_t var, const SysPoly& value) const {
  std::vector<SysPoly> parts = coefficients_in(var);
  SysPoly r(nvars_, Coeff());
  SysPoly power(nvars_, Coeff(1));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k > 0) power = power * value;
    if (!parts[k].is_zero()) r += parts[k] * power;
  }
  return r;
}

Coeff SysPoly::evaluate(const std::vector<Coeff>& values) const {
  Coeff acc;
  for (const auto& [e, c] : terms_) {
    Coeff t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= values[i];
    acc += t;
  }
  return acc;
}

std::string SysPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < names.size() ? names[i] : "u" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Coeff mag = c.sign_hint() < 0 ? -c : c;
    std::string cs = render(mag);
    if (mag.is_compound()) cs = "(" + cs + ")";
    std::string term = mono.empty() ? cs : (mag.is_one() ? mono : cs + "*" + mono);
    if (first)
      out = (c.sign_hint() < 0 ? "-" : "") + term;
    else
      out += (c.sign_hint() < 0 ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

// Branches ----------------------------------------------------------------

bool SolutionBranch::is_point() const { return std::none_of(free.begin(), free.end(), [](bool f) { return f; }); }

std::vector<Coeff> SolutionBranch::sample(const Coeff& s) const {
  std::vector<Coeff> at(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) at[i] = free[i] ? s : Coeff();
  std::vector<Coeff> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = free[i] ? s : values[i].evaluate(at);
  return out;
}

std::string SolutionBranch::to_string(const std::vector<std::string>& names) const {
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += (i < names.size() ? names[i] : "u" + std::to_string(i)) + " = ";
    out += free[i] ? "free" : values[i].to_string(names);
  }
  return out + "}";
}

// Rational roots ------------------------------------------------------------

namespace {

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, int>> primes;
  Integer p = 2;
  long steps = 0;
  while (p * p <= n && steps < 2000000) {
    int k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k) primes.emplace_back(p, k);
    p += (p == 2) ? 1 : 2;
    ++steps;
  }
  if (n > 1) primes.emplace_back(n, 1);  // prime, or left unsplit past the trial bound
  std::vector<Integer> out{1};
  for (const auto& [q, k] : primes) {
    const std::size_t m = out.size();
    Integer pw = 1;
    for (int i = 0; i < k; ++i) {
      pw *= q;
      for (std::size_t j = 0; j < m; ++j) out.push_back(out[j] * pw);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs, bool* has_other_roots) {
  QPoly p(coeffs);
  std::vector<Rat> roots;
  if (has_other_roots) *has_other_roots = false;
  if (p.degree() <= 0) return roots;
  if (is_zero(p.coeff(0))) {
    roots.push_back(0);
    while (is_zero(p.coeff(0))) p = QPoly::exact_div(p, QPoly::variable());
  }
  // Integer coefficients.
  Integer l = 1;
  for (int i = 0; i <= p.degree(); ++i) l = lcm(l, Rat(p.coeff(i)).get_den());
  std::vector<Integer> ic;
  for (int i = 0; i <= p.degree(); ++i) {
    Rat v = p.coeff(i) * l;
    ic.push_back(v.get_num());
  }
  if (p.degree() > 0) {
    for (const Integer& num : divisors(ic.front()))
      for (const Integer& den : divisors(ic.back()))
        for (int s : {1, -1}) {
          Rat r(Integer(s * num), den);
          r.canonicalize();
          if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
          if (is_zero(p(r))) roots.push_back(r);
        }
  }
  QPoly rest = p;
  for (const Rat& r : roots) {
    if (is_zero(r)) continue;
    QPoly lin(std::vector<Rat>{-r, Rat(1)});
    while (rest.degree() > 0 && is_zero(rest(r))) rest = QPoly::exact_div(rest, lin);
  }
  if (has_other_roots) *has_other_roots = rest.degree() > 0;
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Groebner bases ------------------------------------------------------------

namespace {

using Exponents = SysPoly::Exponents;

bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Exponents lcm_exp(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = std::max(a[i], b[i]);
  return e;
}

bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

SysPoly monomial_times(const SysPoly& p, const Exponents& m, const Coeff& c) {
  SysPoly r(p.nvars(), Coeff());
  for (const auto& [e, v] : p.terms()) {
    Exponents f(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] + m[i];
    r.add_term(f, v * c);
  }
  return r;
}

Exponents quotient_exp(const Exponents& a, const Exponents& b) {
  Exponents e(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) e[i] = a[i] - b[i];
  return e;
}

// Full normal form of f modulo the monic basis g.
SysPoly normal_form(SysPoly f, const std::vector<SysPoly>& g, const Deadline& deadline) {
  SysPoly r(f.nvars(), Coeff());
  while (!f.is_zero()) {
    deadline.check();
    const Exponents lt = f.leading_exponents();
    const Coeff lc = f.leading_coeff();
    const SysPoly* div = nullptr;
    for (const auto& q : g)
      if (divides(q.leading_exponents(), lt)) {
        div = &q;
        break;
      }
    if (div) {
      f -= monomial_times(*div, quotient_exp(lt, div->leading_exponents()), lc);
    } else {
      r.add_term(lt, lc);
      f.add_term(lt, -lc);
    }
  }
  return r;
}

int exp_degree(const Exponents& e) {
  int s = 0;
  for (int v : e) s += v;
  return s;
}

}  // namespace

std::vector<SysPoly> groebner_basis(std::vector<SysPoly> polys, const Deadline& deadline) {
  std::vector<SysPoly> g;
  for (auto& p : polys)
    if (!p.is_zero()) g.push_back(p.monic());
  if (g.empty()) return g;
  const std::size_t n = g.front().nvars();
  for (const auto& p : g)
    if (p.is_constant()) return {SysPoly(n, Coeff(1))};

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  while (!pairs.empty()) {
    deadline.check();
    // Normal selection: smallest lcm degree, then lexicographically smallest.
    auto best = pairs.begin();
    Exponents best_l = lcm_exp(g[best->first].leading_exponents(), g[best->second].leading_exponents());
    for (auto it = pairs.begin() + 1; it != pairs.end(); ++it) {
      Exponents l = lcm_exp(g[it->first].leading_exponents(), g[it->second].leading_exponents());
      if (exp_degree(l) < exp_degree(best_l) || (exp_degree(l) == exp_degree(best_l) && l < best_l)) {
        best = it;
        best_l = std::move(l);
      }
    }
    auto [i, j] = *best;
    pairs.erase(best);
    const Exponents& li = g[i].leading_exponents();
    const Exponents& lj = g[j].leading_exponents();
    if (coprime(li, lj)) continue;
    // Chain criterion: skip when some k has LM(k) | lcm and both pairs with k
    // are already treated.
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == i || k == j || !divides(g[k].leading_exponents(), best_l)) continue;
      auto pending = [&](std::size_t a, std::size_t b) {
        auto key = std::minmax(a, b);
        return std::find(pairs.begin(), pairs.end(), std::make_pair(key.first, key.second)) != pairs.end();
      };
      if (!pending(i, k) && !pending(j, k)) chain = true;
    }
    if (chain) continue;
    SysPoly s = monomial_times(g[i], quotient_exp(best_l, li), Coeff(1)) -
                monomial_times(g[j], quotient_exp(best_l, lj), Coeff(1));
    SysPoly r = normal_form(std::move(s), g, deadline);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) return {SysPoly(n, Coeff(1))};
    g.push_back(std::move(r));
    for (std::size_t k = 0; k + 1 < g.size(); ++k) pairs.emplace_back(k, g.size() - 1);
  }
  // Minimal, then reduced.
  std::vector<SysPoly> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j || !divides(g[j].leading_exponents(), g[i].leading_exponents())) continue;
      redundant = g[j].leading_exponents() != g[i].leading_exponents() || j < i;
    }
    if (!redundant) minimal.push_back(g[i]);
  }
  std::vector<SysPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<SysPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    SysPoly tail = minimal[i];
    const Exponents lt = tail.leading_exponents();
    tail.add_term(lt, -tail.leading_coeff());
    SysPoly r = normal_form(tail, others, deadline);
    r.add_term(lt, Coeff(1));
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [](const SysPoly& a, const SysPoly& b) { return compare(a, b) < 0; });
  return reduced;
}

// System solving --------------------------------------------------------------

namespace {

struct Node {
  std::vector<SysPoly> eqs;
  std::size_t next_stage = 0;
  std::vector<SysPoly> values;
  std::vector<bool> assigned;
  bool is_basis = false;
};

class Solver {
 public:
  Solver(const CoeffSystem& sys, const SystemSolveOptions& opt) : sys_(sys), opt_(opt) {}

  SystemSolution run() {
    const std::size_t n = sys_.unknowns.size();
    std::vector<int> keys = sys_.stages;
    keys.resize(sys_.equations.size(), 0);
    std::map<int, std::vector<SysPoly>> grouped;
    for (std::size_t i = 0; i < sys_.equations.size(); ++i) grouped[keys[i]].push_back(sys_.equations[i]);
    for (auto& [k, g] : grouped) stages_.push_back(std::move(g));
    Node root;
    for (std::size_t i = 0; i < n; ++i) root.values.push_back(SysPoly::variable(n, i));
    root.assigned.assign(n, false);
    recurse(std::move(root));
    std::sort(out_.branches.begin(), out_.branches.end(), [](const SolutionBranch& a, const SolutionBranch& b) {
      return less(a, b);
    });
    out_.branches.erase(std::unique(out_.branches.begin(), out_.branches.end(),
                                    [](const SolutionBranch& a, const SolutionBranch& b) {
                                      return a.values == b.values && a.free == b.free;
                                    }),
                        out_.branches.end());
    return std::move(out_);
  }

 private:
  static bool less(const SolutionBranch& a, const SolutionBranch& b) {
    for (std::size_t i = 0; i < a.values.size(); ++i) {
      if (a.free[i] != b.free[i]) return a.free[i] < b.free[i];
      auto c = compare(a.values[i], b.values[i]);
      if (c != 0) return c < 0;
    }
    return false;
  }

  // Drops zero equations, makes the rest monic and unique. False when some
  // equation is a nonzero constant.
  static bool tidy(std::vector<SysPoly>& eqs) {
    std::vector<SysPoly> out;
    for (auto& e : eqs) {
      if (e.is_zero()) continue;
      if (e.is_constant()) return false;
      out.push_back(e.monic());
    }
    std::sort(out.begin(), out.end(), [](const SysPoly& a, const SysPoly& b) {
      if (a.terms().size() != b.terms().size()) return a.terms().size() < b.terms().size();
      return compare(a, b) < 0;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    eqs = std::move(out);
    return true;
  }

  static Node assign(const Node& node, std::size_t var, const SysPoly& value) {
    Node next;
    next.assigned = node.assigned;
    next.assigned[var] = true;
    next.next_stage = node.next_stage;
    for (const auto& e : node.eqs) next.eqs.push_back(e.substitute(var, value));
    for (std::size_t i = 0; i < node.values.size(); ++i)
      next.values.push_back(i == var ? value : node.values[i].substitute(var, value));
    return next;
  }

  void pull_stage(Node& node) const {
    for (SysPoly e : stages_[node.next_stage]) {
      for (std::size_t v = 0; v < node.values.size(); ++v)
        if (node.assigned[v]) e = e.substitute(v, node.values[v]);
      node.eqs.push_back(std::move(e));
    }
    ++node.next_stage;
    node.is_basis = false;
  }

  void recurse(Node node) {
    opt_.deadline.check();
    if (!tidy(node.eqs)) return;
    if (node.eqs.empty() && node.next_stage < stages_.size()) {
      pull_stage(node);
      recurse(std::move(node));
      return;
    }
    if (node.eqs.empty()) {
      SolutionBranch b;
      b.values = node.values;
      b.free.resize(node.values.size());
      for (std::size_t i = 0; i < b.free.size(); ++i) b.free[i] = !node.assigned[i];
      out_.branches.push_back(std::move(b));
      return;
    }
    const std::size_t n = node.values.size();

    // An unknown occurring linearly with a constant coefficient.
    for (const auto& e : node.eqs) {
      std::vector<bool> sup = e.support();
      for (std::size_t v = n; v-- > 0;) {
        if (!sup[v] || e.degree_in(v) != 1) continue;
        std::vector<SysPoly> parts = e.coefficients_in(v);
        if (!parts[1].is_constant()) continue;
        SysPoly value = (-parts[0]).scaled(parts[1].constant_term().inverse());
        recurse(assign(node, v, value));
        return;
      }
    }

    // A factor u_v^k common to every term: split on u_v = 0.
    for (std::size_t idx = 0; idx < node.eqs.size(); ++idx) {
      const SysPoly& e = node.eqs[idx];
      for (std::size_t v = 0; v < n; ++v) {
        int k = e.degree_in(v);
        for (const auto& [ex, c] : e.terms()) k = std::min(k, ex[v]);
        if (k == 0) continue;
        recurse(assign(node, v, SysPoly(n, Coeff())));
        Node other = node;
        SysPoly reduced(n, Coeff());
        for (const auto& [ex, c] : e.terms()) {
          Exponents f = ex;
          f[v] -= k;
          reduced.add_term(f, c);
        }
        other.eqs[idx] = std::move(reduced);
        other.is_basis = false;
        recurse(std::move(other));
        return;
      }
    }

    // A univariate equation: branch on its rational roots.
    for (const auto& e : node.eqs) {
      std::vector<bool> sup = e.support();
      if (std::count(sup.begin(), sup.end(), true) != 1) continue;
      const std::size_t v = static_cast<std::size_t>(std::find(sup.begin(), sup.end(), true) - sup.begin());
      std::vector<SysPoly> parts = e.coefficients_in(v);
      std::vector<Coeff> cs;
      bool rational = true;
      for (const auto& p : parts) {
        cs.push_back(p.constant_term());
        rational = rational && cs.back().is_rational();
      }
      std::vector<Coeff> roots;
      bool others = false;
      if (rational) {
        std::vector<Rat> qs;
        for (const auto& c : cs) qs.push_back(c.rational());
        for (const Rat& r : rational_roots(qs, &others)) roots.emplace_back(r);
      } else {
        // Over Q(b): only a power of a linear factor is resolved.
        UniPoly u(cs);
        UniPoly sqf = UniPoly::exact_div(u, gcd(u, u.derivative()));
        if (sqf.degree() == 1)
          roots.push_back(-sqf.coeff(0) / sqf.coeff(1));
        else
          others = true;
      }
      if (others) out_.notes.push_back("discarded non-rational roots of " + e.to_string(sys_.unknowns) + " = 0");
      for (const Coeff& r : roots) recurse(assign(node, v, SysPoly(n, r)));
      return;
    }

    if (!node.is_basis) {
      std::vector<SysPoly> g = groebner_basis(node.eqs, opt_.deadline);
      if (g.size() == 1 && g.front().is_constant()) return;
      node.eqs = std::move(g);
      node.is_basis = true;
      recurse(std::move(node));
      return;
    }
    if (node.next_stage < stages_.size()) {
      // Underdetermined so far; later stages may pin it down.
      pull_stage(node);
      recurse(std::move(node));
      return;
    }
    std::string text;
    for (const auto& e : node.eqs) text += (text.empty() ? "" : ", ") + e.to_string(sys_.unknowns);
    out_.notes.push_back("dropped component without rational parametrization: {" + text + "}");
  }

  const CoeffSystem& sys_;
  const SystemSolveOptions& opt_;
  std::vector<std::vector<SysPoly>> stages_;
  SystemSolution out_;
};

}  // namespace

SystemSolution solve_system(const CoeffSystem& sys, const SystemSolveOptions& options) {
  if (sys.unknowns.size() > options.max_unknowns)
    throw CapExceeded("system has " + std::to_string(sys.unknowns.size()) + " unknowns, cap is " +
                      std::to_string(options.max_unknowns));
  for (const auto& e : sys.equations)
    if (!e.is_zero() && e.nvars() != sys.unknowns.size()) throw std::invalid_argument("equation arity mismatch");
  return Solver(sys, options).run();
}

}  // namespace liouville
