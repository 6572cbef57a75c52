#pragma once

#include <string>

#include "liouville/mpoly.hpp"

namespace liouville {

// Quotient num/den in lowest terms with den primitive-positive normalized.
class RatFunc {
 public:
  RatFunc() : den_(Coeff(1)) {}
  RatFunc(const MPoly& p) : num_(p), den_(Coeff(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Coeff& c) : RatFunc(MPoly(c)) {}        // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(MPoly(c)) {}                // NOLINT(google-explicit-constructor)
  // Reduces to lowest terms. Throws ZeroDenominatorError when den is zero.
  RatFunc(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool depends_on_x() const { return num_.depends_on_x() || den_.depends_on_x(); }
  bool depends_on_y() const { return num_.depends_on_y() || den_.depends_on_y(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  RatFunc dx() const;
  RatFunc dy() const;

  // Throws PoleError when the denominator vanishes at the point.
  Coeff eval(const Coeff& x0, const Coeff& y0) const;

  std::string to_string() const;

 private:
  struct Reduced {};
  RatFunc(MPoly num, MPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

  MPoly num_;
  MPoly den_;
};

}  // namespace liouville
