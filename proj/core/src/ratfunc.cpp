#include "liouville/ratfunc.hpp"

#include "liouville/errors.hpp"
#include "liouville/render.hpp"

namespace liouville {

RatFunc::RatFunc(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) throw ZeroDenominatorError("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = MPoly(Coeff(1));
    return;
  }
  if (den.is_constant()) {
    num_ = num.scaled(den.constant_term().inverse());
    den_ = MPoly(Coeff(1));
    return;
  }
  MPoly g = poly_gcd(num, den);
  MPoly n = num, d = den;
  if (!g.is_constant()) {
    n = *divide_exact(num, g);
    d = *divide_exact(den, g);
  }
  const Coeff s = d.normalizing_scale();
  num_ = n.scaled(s);
  den_ = d.scaled(s);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_polynomial() && b.is_polynomial()) return RatFunc(a.num_ * b.num_, MPoly(Coeff(1)), RatFunc::Reduced{});
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw ZeroDenominatorError("division by zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::dx() const {
  if (is_polynomial()) return RatFunc(num_.dx(), den_, Reduced{});
  return RatFunc(num_.dx() * den_ - num_ * den_.dx(), den_ * den_);
}

RatFunc RatFunc::dy() const {
  if (is_polynomial()) return RatFunc(num_.dy(), den_, Reduced{});
  return RatFunc(num_.dy() * den_ - num_ * den_.dy(), den_ * den_);
}

Coeff RatFunc::eval(const Coeff& x0, const Coeff& y0) const {
  Coeff d = den_.eval(x0, y0);
  if (d.is_zero()) throw PoleError("denominator vanishes at the evaluation point");
  return num_.eval(x0, y0) / d;
}

std::string RatFunc::to_string() const { return render(*this); }

}  // namespace liouville
