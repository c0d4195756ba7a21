#pragma once

#include <map>
#include <vector>

#include "pmf/rational.hpp"

namespace pmf {

/// Exact truncated q-expansion with rational exponents on a fixed grid:
/// every exponent is a multiple of 1/grain. Coefficients are complete and
/// trusted for all exponents below trunc(); querying at or beyond the
/// truncation throws TruncationError rather than returning a silent zero.
class QExp {
 public:
  QExp(long grain, Rational trunc);

  long grain() const { return grain_; }
  const Rational& trunc() const { return trunc_; }
  const std::map<Rational, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Smallest stored exponent; throws on the zero series.
  const Rational& min_exponent() const;

  void set(const Rational& exponent, const Rational& coeff);
  /// Exact coefficient; TruncationError when exponent >= trunc.
  Rational coeff(const Rational& exponent) const;

  /// All grid exponents in [from, trunc), including absent (zero) ones.
  std::vector<Rational> window_exponents(const Rational& from = Rational(0)) const;

  QExp with_trunc(const Rational& t) const;

  friend QExp operator+(const QExp& x, const QExp& y);
  friend QExp operator-(const QExp& x, const QExp& y);
  friend QExp operator*(const QExp& x, const QExp& y);
  QExp operator-() const;
  friend QExp operator*(const Rational& c, const QExp& x);
  friend bool operator==(const QExp& x, const QExp& y);

  QExp pow(unsigned long n) const;

  /// Exponentwise agreement on the overlap window [0, min trunc).
  static bool agree(const QExp& x, const QExp& y);

 private:
  void check_grid(const Rational& e) const;
  long grain_;
  Rational trunc_;
  std::map<Rational, Rational> terms_;
};

/// num/den by recursive elimination from den's minimal term upward.
/// The result window shrinks by den's minimal exponent.
QExp divide(const QExp& num, const QExp& den);

/// Exponent map e -> e*factor (tau -> factor^-1 adjusts accordingly):
/// substitute_scale_up(x, m) realizes tau -> m*tau, substitute_scale_down
/// realizes tau -> tau/m (grain multiplies by m).
QExp substitute_scale_up(const QExp& x, long m);
QExp substitute_scale_down(const QExp& x, long m);

/// tau -> tau + 1 on a half-integral grid: coefficient at e picks up (-1)^{2e}.
QExp phase_twist_T(const QExp& x);

}  // namespace pmf
