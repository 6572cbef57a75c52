#include "liouville/mpoly.hpp"

#include <algorithm>
#include <stdexcept>

#include "liouville/render.hpp"

namespace liouville {

MPoly::MPoly(const Coeff& c) {
  if (!c.is_zero()) terms_.emplace(Mono{0, 0}, c);
}

MPoly::MPoly(std::initializer_list<std::pair<const Mono, Coeff>> terms) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

MPoly MPoly::x() { return monomial(Coeff(1), {1, 0}); }
MPoly MPoly::y() { return monomial(Coeff(1), {0, 1}); }

MPoly MPoly::monomial(const Coeff& c, Mono m) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

MPoly MPoly::from_x(const UniPoly& p) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term({i, 0}, p.coeff(i));
  return r;
}

MPoly MPoly::from_y(const UniPoly& p) {
  MPoly r;
  for (int i = 0; i <= p.degree(); ++i) r.add_term({0, i}, p.coeff(i));
  return r;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

int MPoly::total_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int MPoly::degree_x() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dx);
  return d;
}

int MPoly::degree_y() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.dy);
  return d;
}

bool MPoly::is_rational() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_rational(); });
}

Coeff MPoly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coeff() : it->second;
}

void MPoly::add_term(Mono m, const Coeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

MPoly MPoly::scaled(const Coeff& s) const {
  if (s.is_zero()) return {};
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c *= s;
  return r;
}

MPoly MPoly::pow(unsigned k) const {
  MPoly r(Coeff(1));
  MPoly b = *this;
  while (k) {
    if (k & 1U) r = r * b;
    k >>= 1U;
    if (k) b = b * b;
  }
  return r;
}

std::strong_ordering compare(const MPoly& a, const MPoly& b) {
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
    auto c = grlex(ia->first, ib->first);
    if (c != 0) return c;
    auto cc = compare(ia->second, ib->second);
    if (cc != 0) return cc;
  }
  if (ia != a.terms_.end()) return std::strong_ordering::greater;
  if (ib != b.terms_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

MPoly MPoly::dx() const {
  MPoly r;
  for (const auto& [m, c] : terms_)
    if (m.dx > 0) r.add_term({m.dx - 1, m.dy}, c * Coeff(static_cast<long>(m.dx)));
  return r;
}

MPoly MPoly::dy() const {
  MPoly r;
  for (const auto& [m, c] : terms_)
    if (m.dy > 0) r.add_term({m.dx, m.dy - 1}, c * Coeff(static_cast<long>(m.dy)));
  return r;
}

namespace {

Coeff power(const Coeff& b, int e) {
  Coeff r(1);
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

Coeff MPoly::eval(const Coeff& x0, const Coeff& y0) const {
  Coeff acc;
  for (const auto& [m, c] : terms_) acc += c * power(x0, m.dx) * power(y0, m.dy);
  return acc;
}

MPoly MPoly::compose(const MPoly& xs, const MPoly& ys) const {
  MPoly acc;
  for (const auto& [m, c] : terms_) acc += xs.pow(m.dx) * ys.pow(m.dy) * MPoly(c);
  return acc;
}

UniPoly MPoly::as_x() const {
  if (depends_on_y()) throw std::invalid_argument("polynomial depends on y");
  std::vector<Coeff> c(static_cast<std::size_t>(std::max(0, degree_x() + 1)));
  for (const auto& [m, v] : terms_) c[static_cast<std::size_t>(m.dx)] = v;
  return UniPoly(std::move(c));
}

UniPoly MPoly::as_y() const {
  if (depends_on_x()) throw std::invalid_argument("polynomial depends on x");
  std::vector<Coeff> c(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
  for (const auto& [m, v] : terms_) c[static_cast<std::size_t>(m.dy)] = v;
  return UniPoly(std::move(c));
}

std::vector<UniPoly> MPoly::y_coefficients() const {
  std::vector<std::vector<Coeff>> raw(static_cast<std::size_t>(std::max(0, degree_y() + 1)));
  for (const auto& [m, v] : terms_) {
    auto& row = raw[static_cast<std::size_t>(m.dy)];
    if (row.size() <= static_cast<std::size_t>(m.dx)) row.resize(static_cast<std::size_t>(m.dx) + 1);
    row[static_cast<std::size_t>(m.dx)] = v;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

std::vector<UniPoly> MPoly::x_coefficients() const {
  std::vector<std::vector<Coeff>> raw(static_cast<std::size_t>(std::max(0, degree_x() + 1)));
  for (const auto& [m, v] : terms_) {
    auto& row = raw[static_cast<std::size_t>(m.dx)];
    if (row.size() <= static_cast<std::size_t>(m.dy)) row.resize(static_cast<std::size_t>(m.dy) + 1);
    row[static_cast<std::size_t>(m.dy)] = v;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r));
  return out;
}

namespace {

// Positive rational s making every value in `vals` an integer with overall gcd 1.
Rat integer_content_scale(const std::vector<Rat>& vals) {
  Integer l = 1;
  for (const Rat& v : vals) l = lcm(l, v.get_den());
  Integer g = 0;
  for (const Rat& v : vals) {
    Integer n = v.get_num() * (l / v.get_den());
    g = gcd(g, n);
  }
  if (g == 0) return Rat(1);
  Rat s(l, g);
  s.canonicalize();
  return s;
}

}  // namespace

Coeff joint_normalizing_scale(const std::vector<Coeff>& coeffs, const Coeff& lead) {
  if (lead.is_zero()) throw std::invalid_argument("normalizing with a zero leading coefficient");
  const Coeff inv = lead.inverse();
  const bool rational =
      std::all_of(coeffs.begin(), coeffs.end(), [](const Coeff& c) { return c.is_rational(); }) &&
      inv.is_rational();
  if (rational) {
    std::vector<Rat> vals;
    vals.reserve(coeffs.size());
    for (const Coeff& c : coeffs) vals.push_back(c.rational() * inv.rational());
    return Coeff(inv.rational() * integer_content_scale(vals));
  }
  std::vector<Coeff> monic;
  monic.reserve(coeffs.size());
  for (const Coeff& c : coeffs) monic.push_back(c * inv);
  QPoly den_lcm(Rat(1));
  for (const Coeff& c : monic) den_lcm = lcm(den_lcm, c.denominator());
  QPoly num_gcd;
  for (const Coeff& c : monic) {
    QPoly n = QPoly::exact_div(c.numerator() * den_lcm, c.denominator());
    num_gcd = gcd(num_gcd, n);
  }
  const Coeff s1 = inv * Coeff::from_fraction(den_lcm, num_gcd);
  std::vector<Rat> vals;
  for (const Coeff& c : coeffs) {
    const QPoly num = (c * s1).numerator();
    for (const Rat& r : num.coeffs())
      if (sgn(r) != 0) vals.push_back(r);
  }
  return s1 * Coeff(integer_content_scale(vals));
}

Coeff MPoly::normalizing_scale() const {
  if (is_zero()) throw std::invalid_argument("normalizing the zero polynomial");
  std::vector<Coeff> coeffs;
  coeffs.reserve(terms_.size());
  for (const auto& [m, c] : terms_) coeffs.push_back(c);
  return joint_normalizing_scale(coeffs, leading_coeff());
}

MPoly MPoly::normalized() const {
  if (is_zero()) return {};
  return scaled(normalizing_scale());
}

std::string MPoly::to_string() const { return render(*this); }

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  MPoly q;
  MPoly r = a;
  const Mono lb = b.leading_mono();
  const Coeff inv = b.leading_coeff().inverse();
  while (!r.is_zero()) {
    Mono lr = r.leading_mono();
    if (!lb.divides(lr)) return std::nullopt;
    MPoly t = MPoly::monomial(r.leading_coeff() * inv, {lr.dx - lb.dx, lr.dy - lb.dy});
    q += t;
    r -= t * b;
  }
  return q;
}

namespace {

// Polynomial in y with coefficients in Q(b)[x]; index = y-degree.
using YPoly = std::vector<UniPoly>;

int ydeg(const YPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(YPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UniPoly ycontent(const YPoly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

YPoly ydiv(const YPoly& p, const UniPoly& d) {
  YPoly r;
  r.reserve(p.size());
  for (const auto& c : p) r.push_back(UniPoly::exact_div(c, d));
  return r;
}

YPoly primitive_part(const YPoly& p) {
  if (p.empty()) return p;
  return ydiv(p, ycontent(p));
}

// Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b.
YPoly prem(YPoly a, const YPoly& b) {
  const int db = ydeg(b);
  const UniPoly& lb = b.back();
  int e = ydeg(a) - db + 1;
  while (!a.empty() && ydeg(a) >= db) {
    const int shift = ydeg(a) - db;
    const UniPoly top = a.back();
    for (auto& c : a) c = c * lb;
    for (int j = 0; j <= db; ++j)
      a[static_cast<std::size_t>(j + shift)] -= top * b[static_cast<std::size_t>(j)];
    trim(a);
    --e;
  }
  if (e > 0) {
    UniPoly f = lb.pow(static_cast<unsigned>(e));
    for (auto& c : a) c = c * f;
  }
  return a;
}

YPoly to_ypoly(const MPoly& p) {
  YPoly r = p.y_coefficients();
  trim(r);
  return r;
}

MPoly from_ypoly(const YPoly& p) {
  MPoly r;
  for (std::size_t j = 0; j < p.size(); ++j)
    for (int i = 0; i <= p[j].degree(); ++i) r.add_term({i, static_cast<int>(j)}, p[j].coeff(i));
  return r;
}

}  // namespace

MPoly poly_gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  YPoly pa = to_ypoly(a);
  YPoly pb = to_ypoly(b);
  const UniPoly ca = ycontent(pa);
  const UniPoly cb = ycontent(pb);
  const UniPoly content = gcd(ca, cb);
  pa = ydiv(pa, ca);
  pb = ydiv(pb, cb);
  if (ydeg(pa) < ydeg(pb)) std::swap(pa, pb);

  // Subresultant polynomial remainder sequence.
  YPoly result;
  if (ydeg(pb) == 0) {
    result = {UniPoly(Coeff(1))};
  } else {
    UniPoly g(Coeff(1));
    UniPoly h(Coeff(1));
    while (true) {
      const int delta = ydeg(pa) - ydeg(pb);
      YPoly r = prem(pa, pb);
      if (r.empty()) {
        result = primitive_part(pb);
        break;
      }
      if (ydeg(r) == 0) {
        result = {UniPoly(Coeff(1))};
        break;
      }
      pa = std::move(pb);
      pb = ydiv(r, g * h.pow(static_cast<unsigned>(delta)));
      g = pa.back();
      if (delta == 0) {
        // h unchanged
      } else if (delta == 1) {
        h = g;
      } else {
        h = UniPoly::exact_div(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
      }
    }
  }
  for (auto& c : result) c = c * content;
  return from_ypoly(result).normalized();
}

UniPoly content_in_y(const MPoly& p) { return ycontent(to_ypoly(p)); }

UniPoly content_in_x(const MPoly& p) {
  std::vector<UniPoly> xc = p.x_coefficients();
  UniPoly g;
  for (const auto& c : xc) g = gcd(g, c);
  return g;
}

}  // namespace liouville
