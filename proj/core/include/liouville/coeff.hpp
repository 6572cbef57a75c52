#pragma once

#include <compare>
#include <memory>
#include <string>
#include <string_view>

#include "liouville/rational.hpp"
#include "liouville/upoly.hpp"

namespace liouville {

// An element of Q(b): a rational function in at most one symbolic parameter.
// Rational values take a fast path; the parameter-dependent part is only
// allocated when the value actually depends on the parameter.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : value_(v) {}              // NOLINT(google-explicit-constructor)
  Coeff(const Rat& v) : value_(v) {}        // NOLINT(google-explicit-constructor)
  Coeff(const Integer& v) : value_(v) {}    // NOLINT(google-explicit-constructor)

  // The symbolic parameter itself.
  static Coeff parameter();
  // num/den in the parameter; den must be nonzero.
  static Coeff from_fraction(QPoly num, QPoly den);

  bool is_zero() const { return !frac_ && sgn(value_) == 0; }
  bool is_one() const { return !frac_ && value_ == 1; }
  bool is_rational() const { return !frac_; }
  // Value when is_rational(); throws std::logic_error otherwise.
  const Rat& rational() const;

  QPoly numerator() const;
  // Monic in the parameter.
  QPoly denominator() const;

  // Sign used for canonical normalization: sign of the value when rational,
  // otherwise sign of the leading coefficient of the numerator.
  int sign_hint() const;

  // Substitutes a value for the parameter. Throws PoleError on a pole.
  Rat evaluate(const Rat& param_value) const;

  Coeff inverse() const;

  friend Coeff operator+(const Coeff& a, const Coeff& b);
  friend Coeff operator-(const Coeff& a, const Coeff& b);
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator/(const Coeff& a, const Coeff& b);
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { return *this = *this + o; }
  Coeff& operator-=(const Coeff& o) { return *this = *this - o; }
  Coeff& operator*=(const Coeff& o) { return *this = *this * o; }
  Coeff& operator/=(const Coeff& o) { return *this = *this / o; }

  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }
  // Total order for deterministic sorting: rationals first (by value), then
  // parameter-dependent values by coefficient vectors.
  friend std::strong_ordering compare(const Coeff& a, const Coeff& b);

  // Renders with the given parameter name; parenthesized when compound.
  std::string to_string(std::string_view param_name = "b") const;
  // True when the rendering needs parentheses as a product factor.
  bool is_compound() const;

 private:
  struct Frac {
    QPoly num;
    QPoly den;  // monic, gcd(num, den) = 1, degree(num) > 0 or degree(den) > 0
  };

  static Coeff from_reduced(QPoly num, QPoly den);

  Rat value_;
  std::shared_ptr<const Frac> frac_;
};

inline bool is_zero(const Coeff& c) { return c.is_zero(); }

}  // namespace liouville
