#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace pratio {

using Integer = mpz_class;
using Rational = mpq_class;

/// Lowest-terms text form: "p/q", or "p" when the denominator is 1.
inline std::string format(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

inline std::string format(const Integer& z) { return z.get_str(); }

inline Integer factorial(unsigned long k) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

inline Integer power(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace pratio
