#include "liouville/coeff.hpp"

#include <sstream>
#include <stdexcept>

#include "liouville/errors.hpp"

namespace liouville {

namespace {

std::strong_ordering compare_rat(const Rat& a, const Rat& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::strong_ordering compare_qpoly(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    auto c = compare_rat(a.coeff(i), b.coeff(i));
    if (c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string render_qpoly(const QPoly& p, std::string_view name) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Rat c = p.coeff(i);
    if (sgn(c) == 0) continue;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rat a = abs(c);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << name;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

}  // namespace

Coeff Coeff::parameter() { return from_reduced(QPoly::variable(), QPoly(Rat(1))); }

Coeff Coeff::from_fraction(QPoly num, QPoly den) {
  if (den.is_zero()) throw ZeroDenominatorError("zero denominator in parameter fraction");
  if (num.is_zero()) return {};
  QPoly g = gcd(num, den);
  if (g.degree() > 0) {
    num = QPoly::exact_div(num, g);
    den = QPoly::exact_div(den, g);
  }
  return from_reduced(std::move(num), std::move(den));
}

Coeff Coeff::from_reduced(QPoly num, QPoly den) {
  Rat lead = den.lead();
  if (lead != 1) {
    Rat inv = 1 / lead;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  Coeff c;
  if (num.degree() <= 0 && den.degree() == 0) {
    c.value_ = num.coeff(0);
    return c;
  }
  c.frac_ = std::make_shared<const Frac>(Frac{std::move(num), std::move(den)});
  return c;
}

const Rat& Coeff::rational() const {
  if (frac_) throw std::logic_error("coefficient depends on the parameter");
  return value_;
}

QPoly Coeff::numerator() const { return frac_ ? frac_->num : QPoly(value_); }
QPoly Coeff::denominator() const { return frac_ ? frac_->den : QPoly(Rat(1)); }

int Coeff::sign_hint() const {
  if (!frac_) return sgn(value_);
  return sgn(frac_->num.lead());
}

Rat Coeff::evaluate(const Rat& param_value) const {
  if (!frac_) return value_;
  Rat d = frac_->den(param_value);
  if (sgn(d) == 0) throw PoleError("parameter value is a pole of a coefficient");
  Rat v = frac_->num(param_value) / d;
  return v;
}

Coeff Coeff::inverse() const {
  if (is_zero()) throw ZeroDenominatorError("division by zero");
  if (!frac_) {
    Coeff c;
    c.value_ = 1 / value_;
    return c;
  }
  return from_reduced(frac_->den, frac_->num);
}

Coeff operator+(const Coeff& a, const Coeff& b) {
  if (!a.frac_ && !b.frac_) {
    Coeff c;
    c.value_ = a.value_ + b.value_;
    return c;
  }
  if (!a.frac_) return Coeff::from_fraction(b.frac_->num + b.frac_->den.scaled(a.value_), b.frac_->den);
  if (!b.frac_) return Coeff::from_fraction(a.frac_->num + a.frac_->den.scaled(b.value_), a.frac_->den);
  if (a.frac_->den == b.frac_->den) return Coeff::from_fraction(a.frac_->num + b.frac_->num, a.frac_->den);
  return Coeff::from_fraction(a.frac_->num * b.frac_->den + b.frac_->num * a.frac_->den,
                              a.frac_->den * b.frac_->den);
}

Coeff Coeff::operator-() const {
  Coeff c;
  if (!frac_) {
    c.value_ = -value_;
    return c;
  }
  c.frac_ = std::make_shared<const Frac>(Frac{-frac_->num, frac_->den});
  return c;
}

Coeff operator-(const Coeff& a, const Coeff& b) { return a + (-b); }

Coeff operator*(const Coeff& a, const Coeff& b) {
  if (!a.frac_ && !b.frac_) {
    Coeff c;
    c.value_ = a.value_ * b.value_;
    return c;
  }
  if (a.is_zero() || b.is_zero()) return {};
  if (!a.frac_) return Coeff::from_reduced(b.frac_->num.scaled(a.value_), b.frac_->den);
  if (!b.frac_) return Coeff::from_reduced(a.frac_->num.scaled(b.value_), a.frac_->den);
  return Coeff::from_fraction(a.frac_->num * b.frac_->num, a.frac_->den * b.frac_->den);
}

Coeff operator/(const Coeff& a, const Coeff& b) {
  if (!a.frac_ && !b.frac_) {
    if (sgn(b.value_) == 0) throw ZeroDenominatorError("division by zero");
    Coeff c;
    c.value_ = a.value_ / b.value_;
    return c;
  }
  return a * b.inverse();
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!a.frac_ && !b.frac_) return a.value_ == b.value_;
  if (!a.frac_ || !b.frac_) return false;
  return a.frac_->num == b.frac_->num && a.frac_->den == b.frac_->den;
}

std::strong_ordering compare(const Coeff& a, const Coeff& b) {
  if (!a.frac_ && !b.frac_) return compare_rat(a.value_, b.value_);
  if (!a.frac_) return std::strong_ordering::less;
  if (!b.frac_) return std::strong_ordering::greater;
  auto c = compare_qpoly(a.frac_->den, b.frac_->den);
  if (c != 0) return c;
  return compare_qpoly(a.frac_->num, b.frac_->num);
}

bool Coeff::is_compound() const {
  if (!frac_) return false;
  if (frac_->den.degree() > 0) return true;
  // Single-term numerators such as 2*b or b^2 render without parentheses.
  int terms = 0;
  for (const Rat& c : frac_->num.coeffs()) terms += sgn(c) != 0 ? 1 : 0;
  return terms > 1 || sgn(frac_->num.lead()) < 0;
}

std::string Coeff::to_string(std::string_view param_name) const {
  if (!frac_) return value_.get_str();
  std::string num = render_qpoly(frac_->num, param_name);
  if (frac_->den.degree() == 0) return num;
  // The denominator is monic, so a single term is a bare power of the
  // parameter and needs no parentheses.
  auto terms = [](const QPoly& p) {
    int n = 0;
    for (const Rat& c : p.coeffs()) n += sgn(c) != 0 ? 1 : 0;
    return n;
  };
  const QPoly& den = frac_->den;
  if (terms(frac_->num) > 1) num = "(" + num + ")";
  std::string d = render_qpoly(den, param_name);
  if (terms(den) > 1) d = "(" + d + ")";
  return num + "/" + d;
}

}  // namespace liouville
