#include "liouville/render.hpp"

#include <sstream>

namespace liouville {

namespace {

std::string monomial_text(Mono m) {
  std::string s;
  auto append = [&s](const char* var, int e) {
    if (e == 0) return;
    if (!s.empty()) s += "*";
    s += var;
    if (e > 1) s += "^" + std::to_string(e);
  };
  append("x", m.dx);
  append("y", m.dy);
  return s;
}

bool compact(const RenderOptions& o) { return o.style == RenderStyle::json_embeddable; }

// Single term, coefficient one: safe as an operand of '/' or '^'.
bool is_bare_power(const MPoly& p) {
  if (p.size() != 1) return false;
  const auto& [m, c] = *p.terms().begin();
  return c.is_one() && (m.dx == 0 || m.dy == 0) && m.degree() > 0;
}

std::string parenthesize_unless_bare(const MPoly& p, const RenderOptions& opts) {
  std::string s = render(p, opts);
  if (is_bare_power(p) && (p.leading_mono().degree() == 1)) return s;
  return "(" + s + ")";
}

std::string exponent_text(const Coeff& e, const RenderOptions& opts) {
  if (e.is_rational() && is_integer(e.rational())) return e.rational().get_str();
  return "(" + render(e, opts) + ")";
}

}  // namespace

std::string render(const Coeff& c, const RenderOptions& opts) { return c.to_string(opts.param_name); }

std::string render(const MPoly& p, const RenderOptions& opts) {
  if (p.is_zero()) return "0";
  const std::string plus = compact(opts) ? "+" : " + ";
  const std::string minus = compact(opts) ? "-" : " - ";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const std::string mono = monomial_text(m);
    std::string body;
    bool negative = false;
    if (c.is_rational()) {
      negative = sgn(c.rational()) < 0;
      Rat a = abs(c.rational());
      if (mono.empty()) {
        body = a.get_str();
      } else {
        body = a == 1 ? mono : a.get_str() + "*" + mono;
      }
    } else if (const Coeff mag = c.sign_hint() < 0 ? -c : c; mag.is_compound()) {
      body = "(" + c.to_string(opts.param_name) + ")";
      if (!mono.empty()) body += "*" + mono;
    } else {
      negative = c.sign_hint() < 0;
      body = mag.to_string(opts.param_name);
      if (!mono.empty()) body += "*" + mono;
    }
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? minus : plus);
    }
    os << body;
    first = false;
  }
  return os.str();
}

std::string render(const RatFunc& f, const RenderOptions& opts) {
  if (f.is_polynomial()) return render(f.num(), opts);
  std::string num = render(f.num(), opts);
  if (f.num().size() > 1) num = "(" + num + ")";
  std::string den = render(f.den(), opts);
  if (!is_bare_power(f.den())) den = "(" + den + ")";
  return num + "/" + den;
}

std::string render(const FOODE& eq, const RenderOptions& opts) {
  const char* eqs = compact(opts) ? "dy/dx=" : "dy/dx = ";
  return eqs + render(RatFunc(eq.m(), eq.n()), opts);
}

std::string render(const IntegratingFactor& r, const RenderOptions& opts) {
  const std::string times = compact(opts) ? "*" : " * ";
  std::string out;
  auto append = [&](const std::string& s) {
    if (!out.empty()) out += times;
    out += s;
  };
  if (!r.r0.is_zero()) append("exp(" + render(r.r0, opts) + ")");
  for (const Factor& f : r.factors) {
    std::string base = parenthesize_unless_bare(f.p, opts);
    if (f.exponent.is_one()) {
      append(base);
    } else {
      append(base + "^" + exponent_text(f.exponent, opts));
    }
  }
  if (out.empty()) return "1";
  return out;
}

}  // namespace liouville
