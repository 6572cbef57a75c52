#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liouville/coeff.hpp"
#include "liouville/upoly.hpp"

namespace liouville {

// Exponent pair x^dx * y^dy.
struct Mono {
  int dx = 0;
  int dy = 0;

  int degree() const { return dx + dy; }
  friend bool operator==(const Mono&, const Mono&) = default;
  friend Mono operator*(Mono a, Mono b) { return {a.dx + b.dx, a.dy + b.dy}; }
  bool divides(Mono o) const { return dx <= o.dx && dy <= o.dy; }
};

// Graded lexicographic order with x > y.
inline std::strong_ordering grlex(Mono a, Mono b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  return a.dx <=> b.dx;
}

struct GrlexDescending {
  bool operator()(Mono a, Mono b) const { return grlex(a, b) > 0; }
};

// Univariate polynomial over Q(b) (in x or y depending on context).
using UniPoly = UPoly<Coeff>;

// Sparse polynomial in x, y over Q(b). Terms are kept in descending graded
// lexicographic order; no stored coefficient is zero.
class MPoly {
 public:
  using TermMap = std::map<Mono, Coeff, GrlexDescending>;

  MPoly() = default;
  MPoly(const Coeff& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c) : MPoly(Coeff(c)) {}  // NOLINT(google-explicit-constructor)
  MPoly(std::initializer_list<std::pair<const Mono, Coeff>> terms);

  static MPoly x();
  static MPoly y();
  static MPoly monomial(const Coeff& c, Mono m);
  static MPoly from_x(const UniPoly& p);
  static MPoly from_y(const UniPoly& p);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  int total_degree() const;
  int degree_x() const;
  int degree_y() const;
  bool depends_on_x() const { return degree_x() > 0; }
  bool depends_on_y() const { return degree_y() > 0; }
  bool is_rational() const;  // every coefficient free of the parameter

  Coeff coeff(Mono m) const;
  Mono leading_mono() const { return terms_.begin()->first; }
  const Coeff& leading_coeff() const { return terms_.begin()->second; }
  Coeff constant_term() const { return coeff({0, 0}); }

  void add_term(Mono m, const Coeff& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly scaled(const Coeff& s) const;
  MPoly pow(unsigned k) const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }
  // Total order (for sorting): graded-lex on terms, then coefficients.
  friend std::strong_ordering compare(const MPoly& a, const MPoly& b);

  MPoly dx() const;
  MPoly dy() const;

  Coeff eval(const Coeff& x0, const Coeff& y0) const;
  // Substitutes polynomials for x and y.
  MPoly compose(const MPoly& xs, const MPoly& ys) const;

  // Views as a univariate polynomial; the other variable must be absent.
  UniPoly as_x() const;
  UniPoly as_y() const;
  // Coefficients of powers of y, each a polynomial in x (index = y-degree).
  std::vector<UniPoly> y_coefficients() const;
  std::vector<UniPoly> x_coefficients() const;

  // Primitive-positive normal form (content removed, positive leading
  // coefficient). Idempotent; zero maps to zero.
  MPoly normalized() const;
  // Scalar s with normalized() == scaled(s). Requires nonzero.
  Coeff normalizing_scale() const;

  std::string to_string() const;

 private:
  TermMap terms_;
};

// Scale s such that every coefficient times s, taken together, forms a
// primitive set (integer content one; for parameter-dependent values, also
// polynomial content one) with lead * s having positive sign hint.
Coeff joint_normalizing_scale(const std::vector<Coeff>& coeffs, const Coeff& lead);

// Quotient a / b when b divides a exactly.
std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);

// Primitive-positive gcd; gcd(a, 0) = normalized a, gcd(0, 0) = 0.
MPoly poly_gcd(const MPoly& a, const MPoly& b);

// gcd of the y-coefficients: the largest factor depending only on x (monic).
UniPoly content_in_y(const MPoly& p);
// gcd of the x-coefficients: the largest factor depending only on y (monic).
UniPoly content_in_x(const MPoly& p);

}  // namespace liouville
