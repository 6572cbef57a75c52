#pragma once

#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include "liouville/rational.hpp"

namespace liouville {

namespace detail {
template <class F>
bool coeff_is_zero(const F& v) {
  return is_zero(v);
}
}  // namespace detail

// Dense univariate polynomial over a field F. Coefficients are stored in
// increasing degree; the zero polynomial has no coefficients and degree -1.
template <class F>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }
  UPoly(const F& constant) {  // NOLINT(google-explicit-constructor)
    if (!detail::coeff_is_zero(constant)) c_.push_back(constant);
  }

  static UPoly monomial(const F& coeff, int degree) {
    if (detail::coeff_is_zero(coeff)) return {};
    std::vector<F> c(static_cast<std::size_t>(degree) + 1, F(0));
    c.back() = coeff;
    return UPoly(std::move(c));
  }
  static UPoly variable() { return monomial(F(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<F>& coeffs() const { return c_; }

  F coeff(int i) const {
    if (i < 0 || i > degree()) return F(0);
    return c_[static_cast<std::size_t>(i)];
  }
  const F& lead() const {
    assert(!c_.empty());
    return c_.back();
  }

  F operator()(const F& at) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::coeff_is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly scaled(const F& s) const {
    if (detail::coeff_is_zero(s)) return {};
    UPoly r = *this;
    for (auto& v : r.c_) v = v * s;
    return r;
  }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<F> r(c_.size() - 1, F(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * F(static_cast<long>(i));
    return UPoly(std::move(r));
  }
  // Antiderivative with zero constant term.
  UPoly integral() const {
    if (c_.empty()) return {};
    std::vector<F> r(c_.size() + 1, F(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + 1] = c_[i] / F(static_cast<long>(i + 1));
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return {};
    return scaled(F(1) / lead());
  }

  UPoly pow(unsigned k) const {
    UPoly r(F(1));
    UPoly b = *this;
    while (k) {
      if (k & 1U) r = r * b;
      k >>= 1U;
      if (k) b = b * b;
    }
    return r;
  }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UPoly(), a};
    std::vector<F> rem = a.c_;
    std::vector<F> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, F(0));
    const F inv = F(1) / b.lead();
    const auto db = static_cast<std::size_t>(b.degree());
    for (std::size_t k = quo.size(); k-- > 0;) {
      const F& top = rem[k + db];
      if (detail::coeff_is_zero(top)) continue;
      F t = top * inv;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] = rem[k + j] - t * b.c_[j];
      quo[k] = t;
    }
    rem.resize(db);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return divmod(a, b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return divmod(a, b).second; }

  // Quotient when b divides a exactly; throws otherwise.
  static UPoly exact_div(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }

  std::vector<F> c_;
};

// Monic gcd; gcd(0, 0) = 0.
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
UPoly<F> lcm(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (UPoly<F>::exact_div(a, gcd(a, b)) * b).monic();
}

// Returns (s, t, g) with s*a + t*b = g = gcd(a, b), g monic.
template <class F>
struct ExtGcd {
  UPoly<F> s, t, g;
};

template <class F>
ExtGcd<F> ext_gcd(const UPoly<F>& a, const UPoly<F>& b) {
  UPoly<F> r0 = a, r1 = b;
  UPoly<F> s0(F(1)), s1;
  UPoly<F> t0, t1(F(1));
  while (!r1.is_zero()) {
    auto [q, r] = UPoly<F>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly<F> s2 = s0 - q * s1;
    UPoly<F> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  F inv = F(1) / r0.lead();
  return {s0.scaled(inv), t0.scaled(inv), r0.scaled(inv)};
}

// Solves s*a + t*b = c for coprime a, b with deg s < deg b.
template <class F>
std::pair<UPoly<F>, UPoly<F>> solve_diophantine(const UPoly<F>& a, const UPoly<F>& b,
                                                const UPoly<F>& c) {
  ExtGcd<F> e = ext_gcd(a, b);
  if (e.g.degree() != 0) throw std::domain_error("diophantine: operands not coprime");
  UPoly<F> s = (e.s * c) % b;
  UPoly<F> t = UPoly<F>::exact_div(c - s * a, b);
  return {s, t};
}

// Yun's algorithm. Returns factors f[0], f[1], ... with p = lc * prod f[i]^(i+1),
// each f[i] monic and squarefree, pairwise coprime.
template <class F>
std::vector<UPoly<F>> squarefree_decomposition(const UPoly<F>& p) {
  std::vector<UPoly<F>> out;
  if (p.degree() <= 0) return out;
  UPoly<F> dp = p.derivative();
  UPoly<F> a = gcd(p, dp);
  UPoly<F> b = UPoly<F>::exact_div(p, a);
  UPoly<F> c = UPoly<F>::exact_div(dp, a);
  UPoly<F> d = c - b.derivative();
  while (b.degree() > 0) {
    UPoly<F> g = gcd(b, d);
    out.push_back(g);
    b = UPoly<F>::exact_div(b, g);
    c = UPoly<F>::exact_div(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

using QPoly = UPoly<Rat>;

}  // namespace liouville
