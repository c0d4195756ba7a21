#pragma once

#include <array>

#include "pmf/quadratic.hpp"

namespace pmf {

using Mat4 = std::array<std::array<Rational, 4>, 4>;
/// Row-major (a, b, c, d).
using SL2 = std::array<long, 4>;

Mat4 mat4_identity();
Mat4 mat4_mul(const Mat4& x, const Mat4& y);
bool operator==(const Mat4& x, const Mat4& y);

/// M^T J M = J for the standard symplectic form.
bool is_symplectic(const Mat4& m);

/// Symplectic and sigma_N^{-1} M sigma_N integral, sigma_N = diag(1,1,1,N).
bool in_paramodular(const Mat4& m, long level);

long sl2_det(const SL2& m);
SL2 sl2_mul(const SL2& x, const SL2& y);

/// Block embedding of SL2 x SL2 into K(N) compatible with the diagonal.
Mat4 phi1_embed(const SL2& m1, const SL2& m2, long level);

/// Embedding of the mod-2 congruent pairs into K(N), N odd; compatible
/// with the H4 parametrization. Throws when m1 != m2 mod 2.
Mat4 phi4_embed(const SL2& m1, const SL2& m2, long level);

/// The translation T_b, upper-right block (b1, b2; b2, b3/N).
Mat4 translation(long b1, long b2, long b3, long level);

/// Conjugation diag(u, (u^-1)^T) by an integral matrix u of determinant
/// +-1; lies in K(N) when the upper-right entry of u is divisible by N.
Mat4 conjugation(const SL2& u);

/// A point (tau, z; z, w) of the upper half-space with entries in
/// F + F i for an exact scalar field F.
template <class F>
struct HalfPoint {
  Complex<F> tau, z, w;

  friend bool operator==(const HalfPoint& x, const HalfPoint& y) {
    return x.tau == y.tau && x.z == y.z && x.w == y.w;
  }
};

/// The Fricke involution as a point map: (tau, z, w) -> (Nw, -z, tau/N).
template <class F>
HalfPoint<F> fricke_point(const HalfPoint<F>& p, long level) {
  F n{Rational(level)};
  Complex<F> scale_up{n, F{}};
  return {p.w * scale_up, -p.z, p.tau / scale_up};
}

/// M . tau = (a tau + b)(c tau + d)^{-1} in 2x2 blocks, exactly.
template <class F>
HalfPoint<F> moebius_act(const Mat4& m, const HalfPoint<F>& p) {
  auto entry = [&](int i, int j) { return Complex<F>(F{m[i][j]}); };
  // rows of a tau + b and c tau + d
  Complex<F> n00 = entry(0, 0) * p.tau + entry(0, 1) * p.z + entry(0, 2);
  Complex<F> n01 = entry(0, 0) * p.z + entry(0, 1) * p.w + entry(0, 3);
  Complex<F> n10 = entry(1, 0) * p.tau + entry(1, 1) * p.z + entry(1, 2);
  Complex<F> n11 = entry(1, 0) * p.z + entry(1, 1) * p.w + entry(1, 3);
  Complex<F> d00 = entry(2, 0) * p.tau + entry(2, 1) * p.z + entry(2, 2);
  Complex<F> d01 = entry(2, 0) * p.z + entry(2, 1) * p.w + entry(2, 3);
  Complex<F> d10 = entry(3, 0) * p.tau + entry(3, 1) * p.z + entry(3, 2);
  Complex<F> d11 = entry(3, 0) * p.z + entry(3, 1) * p.w + entry(3, 3);
  Complex<F> det = d00 * d11 - d01 * d10;
  if (det.is_zero()) throw std::domain_error("noninvertible denominator block");
  // (c tau + d)^{-1}
  Complex<F> i00 = d11 / det, i01 = -d01 / det, i10 = -d10 / det, i11 = d00 / det;
  HalfPoint<F> out;
  out.tau = n00 * i00 + n01 * i10;
  out.z = n00 * i01 + n01 * i11;
  Complex<F> z2 = n10 * i00 + n11 * i10;
  out.w = n10 * i01 + n11 * i11;
  if (!(out.z == z2)) throw std::logic_error("Moebius image not symmetric");
  return out;
}

/// Moebius action of a single SL2 matrix on a scalar point.
template <class F>
Complex<F> sl2_act(const SL2& m, const Complex<F>& t) {
  auto lift = [](long v) { return Complex<F>(F{Rational(v)}); };
  Complex<F> den = lift(m[2]) * t + lift(m[3]);
  if (den.is_zero()) throw std::domain_error("noninvertible denominator");
  return (lift(m[0]) * t + lift(m[1])) / den;
}

/// The parametrized H4 point (2 tau1, tau1; tau1, tau1/2 + tau2/2N).
template <class F>
HalfPoint<F> p4_point(const Complex<F>& t1, const Complex<F>& t2, long level) {
  auto scal = [](const Rational& r) { return Complex<F>(F{r}); };
  HalfPoint<F> out;
  out.tau = scal(Rational(2)) * t1;
  out.z = t1;
  out.w = scal(Rational(1, 2)) * t1 + scal(Rational(1, 2 * level)) * t2;
  return out;
}

/// The parametrized H5 point with lambda = (5 - sqrt 5)/10, entries in
/// Q(sqrt 5)[i].
HalfPoint<QuadRational> p5_point(const Complex<QuadRational>& t1,
                                 const Complex<QuadRational>& t2);

}  // namespace pmf
