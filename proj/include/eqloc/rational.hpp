#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace eqloc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (q != 0); result is canonicalized.
Rational parse_rational(std::string_view text);

/// Lowest terms with positive denominator; integers print without "/1".
std::string to_string(const Rational& q);

inline Rational rational(long n, long d = 1) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer binomial(long n, long k);
Rational factorial(long n);

/// Generalized binomial coefficient C(-k, r) = (-1)^r C(k+r-1, r).
Rational negative_binomial(long k, long r);

Rational pow(const Rational& base, unsigned long exponent);

}  // namespace eqloc
