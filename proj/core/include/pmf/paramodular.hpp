#pragma once

#include <map>
#include <optional>
#include <tuple>

#include "pmf/jacobi.hpp"

namespace pmf {

/// Fourier expansion of a paramodular form of level N: coefficients
/// alpha(a, b, c) of q^a r^b s^{Nc}, supported on a, c >= 0 and
/// b^2 <= 4Nac, complete for all a <= amax, c <= cmax.
class ParamodularSeries {
 public:
  ParamodularSeries(long level, long weight, long amax, long cmax);

  long level() const { return level_; }
  long weight() const { return weight_; }
  long amax() const { return amax_; }
  long cmax() const { return cmax_; }
  /// Keys are (a, c, b) so iteration order matches the serialized order.
  const std::map<std::tuple<long, long, long>, Rational>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  void set(long a, long b, long c, const Rational& value);
  /// TruncationError outside the box; exact zero for support violations.
  Rational coeff(long a, long b, long c) const;

  friend ParamodularSeries operator+(const ParamodularSeries& x,
                                     const ParamodularSeries& y);
  friend ParamodularSeries operator-(const ParamodularSeries& x,
                                     const ParamodularSeries& y);
  friend ParamodularSeries operator*(const ParamodularSeries& x,
                                     const ParamodularSeries& y);
  ParamodularSeries operator-() const;
  friend ParamodularSeries operator*(const Rational& c,
                                     const ParamodularSeries& x);
  friend bool operator==(const ParamodularSeries& x, const ParamodularSeries& y);

 private:
  long level_, weight_, amax_, cmax_;
  std::map<std::tuple<long, long, long>, Rational> terms_;
};

/// One Gritsenko lift coefficient straight from Jacobi data:
/// alpha(a,b,c) = sum_{d | gcd(a,b,c)} d^{k-1} c(ac/d^2, b/d) for
/// a, c >= 1, with the Eisenstein boundary rows alpha(a,0,0) =
/// c(0,0) sigma_{k-1}(a) and alpha(0,0,0) = -(B_k/2k) c(0,0).
/// TruncationError when the data cannot reach the requested coefficient.
Rational lift_coefficient(const JacobiFormData& phi, long a, long b, long c);

/// The lift assembled on a box.
ParamodularSeries gritsenko_lift(const JacobiFormData& phi, long amax, long cmax);

/// The paramodular Eisenstein series: the lift of the weight-k index-N
/// Jacobi Eisenstein data rescaled by -(2k/B_k), so the constant term is 1.
ParamodularSeries eisenstein_paramodular(const JacobiFormData& phi, long amax,
                                         long cmax);

/// Coefficient action of the Fricke involution: alpha'(a,b,c) = alpha(c,-b,a).
/// Requires a symmetric box.
ParamodularSeries fricke_permute(const ParamodularSeries& f);

/// +1 or -1 when fricke_permute(f) = eps * f on the box; nullopt otherwise.
std::optional<int> fricke_eigenvalue(const ParamodularSeries& f);

}  // namespace pmf
