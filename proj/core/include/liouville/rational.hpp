#pragma once

#include <gmpxx.h>

#include <string>

namespace liouville {

using Integer = mpz_class;
// Always canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rat = mpq_class;

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }
inline bool is_one(const Rat& q) { return q == 1; }
inline int sign_of(const Rat& q) { return sgn(q); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Rat make_rat(long num, long den = 1) {
  Rat q{Integer(num), Integer(den)};
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

}  // namespace liouville
