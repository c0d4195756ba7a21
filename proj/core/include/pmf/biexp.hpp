#pragma once

#include <map>
#include <utility>
#include <vector>

#include "pmf/qexp.hpp"

namespace pmf {

/// Exponent pair for a two-variable expansion, ordered graded-lex:
/// first by e1 + e2, then by e1. This gives unique leading terms for
/// the few divisions we perform.
struct BiKey {
  Rational e1;
  Rational e2;

  friend bool operator==(const BiKey& x, const BiKey& y) {
    return x.e1 == y.e1 && x.e2 == y.e2;
  }
  friend bool operator<(const BiKey& x, const BiKey& y) {
    Rational dx = x.e1 + x.e2, dy = y.e1 + y.e2;
    int c = cmp(dx, dy);
    if (c != 0) return c < 0;
    return x.e1 < y.e1;
  }
};

/// Exact truncated expansion in two variables (q1, q2) with per-variable
/// exponent grain and truncation. Coefficients are complete for all pairs
/// componentwise below (trunc1, trunc2); queries outside throw.
class BiExp {
 public:
  BiExp(long grain1, long grain2, Rational trunc1, Rational trunc2);

  long grain1() const { return grain1_; }
  long grain2() const { return grain2_; }
  const Rational& trunc1() const { return trunc1_; }
  const Rational& trunc2() const { return trunc2_; }
  const std::map<BiKey, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set(const Rational& e1, const Rational& e2, const Rational& coeff);
  Rational coeff(const Rational& e1, const Rational& e2) const;

  BiExp with_trunc(const Rational& t1, const Rational& t2) const;
  /// Exchanges the two variables.
  BiExp swap() const;

  friend BiExp operator+(const BiExp& x, const BiExp& y);
  friend BiExp operator-(const BiExp& x, const BiExp& y);
  friend BiExp operator*(const BiExp& x, const BiExp& y);
  BiExp operator-() const;
  friend BiExp operator*(const Rational& c, const BiExp& x);
  friend bool operator==(const BiExp& x, const BiExp& y);

  BiExp pow(unsigned long n) const;

  /// Coefficientwise agreement on the overlap window.
  static bool agree(const BiExp& x, const BiExp& y);

 private:
  static void check_grid(const Rational& e, long grain);
  long grain1_, grain2_;
  Rational trunc1_, trunc2_;
  std::map<BiKey, Rational> terms_;
};

/// x(q1) * y(q2) as a two-variable series.
BiExp tensor(const QExp& x, const QExp& y);

/// Coefficient slice at q1^0 (which = 1) or q2^0 (which = 2), as a
/// one-variable series in the remaining variable.
QExp boundary_slice(const BiExp& x, int which);

/// Restriction q1 = q2 = q: coefficient at w sums all e1 + e2 = w.
/// Requires nonnegative exponents; trusted up to min(trunc1, trunc2).
QExp diagonal(const BiExp& x);

/// num/den by elimination from den's graded-lex minimal term upward.
BiExp divide(const BiExp& num, const BiExp& den);

}  // namespace pmf
