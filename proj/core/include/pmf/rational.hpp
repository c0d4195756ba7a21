#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace pmf {

/// Exact arbitrary-precision integer and rational scalars. Rationals are
/// always canonical: lowest terms, positive denominator (mpq invariant).
using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when a result cannot be decided at the available truncation.
/// Distinct from a negative answer and from malformed input.
class TruncationError : public std::runtime_error {
 public:
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown on malformed or insufficient external data (files, tables).
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

/// Serializes as "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& x);

/// Parses "p/q" or "p". Rejects zero denominators and trailing garbage.
Rational parse_rational(const std::string& text);

inline Rational rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Floor of a rational as an Integer.
Integer floor_int(const Rational& x);

/// x^n for integer n >= 0.
Rational pow_rational(const Rational& x, unsigned long n);

/// gcd of three integers; gcd(a,0,c) = gcd(a,c).
Integer gcd3(const Integer& a, const Integer& b, const Integer& c);

/// Largest s with s^2 <= n (n >= 0).
Integer isqrt(const Integer& n);

}  // namespace pmf
