#pragma once

#include <map>

#include "pmf/quadratic.hpp"

namespace pmf {

/// Expansion supported on exponents ξ in a real-quadratic field: the
/// monomial is q1^ξ q2^{ξ'} with ξ' the conjugate, so the q2-exponent is
/// implicit. Exponents are totally nonnegative (ξ ≥ 0 and ξ' ≥ 0) and
/// the series is truncated by trace: coefficients are complete for all ξ
/// with trace(ξ) < trunc.
class QuadPairExp {
 public:
  QuadPairExp(long disc, Rational trunc);

  long disc() const { return disc_; }
  const Rational& trunc() const { return trunc_; }
  const std::map<QuadRational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(const QuadRational& exponent, const Rational& coeff);
  Rational coeff(const QuadRational& exponent) const;

  QuadPairExp with_trunc(const Rational& t) const;

  friend QuadPairExp operator+(const QuadPairExp& x, const QuadPairExp& y);
  friend QuadPairExp operator-(const QuadPairExp& x, const QuadPairExp& y);
  friend QuadPairExp operator*(const QuadPairExp& x, const QuadPairExp& y);
  QuadPairExp operator-() const;
  friend QuadPairExp operator*(const Rational& c, const QuadPairExp& x);
  friend bool operator==(const QuadPairExp& x, const QuadPairExp& y);

  static bool agree(const QuadPairExp& x, const QuadPairExp& y);

 private:
  void check_exponent(const QuadRational& e) const;
  long disc_;
  Rational trunc_;
  std::map<QuadRational, Rational> terms_;
};

}  // namespace pmf
