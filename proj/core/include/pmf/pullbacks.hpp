#pragma once

#include "pmf/biexp.hpp"
#include "pmf/paramodular.hpp"
#include "pmf/quadpair.hpp"

namespace pmf {

/// Witt restriction to the diagonal z = 0: coefficient at (a, c) is
/// sum_b alpha(a,b,c). Output exponents are (a, c), grain 1.
BiExp witt_P1(const ParamodularSeries& f);

/// n-th Taylor moment along z: coefficient at (a, c) is
/// sum_b alpha(a,b,c) b^n. The (2 pi i)^n / n! scalar is dropped;
/// vanishing statements are unaffected. witt_taylor(f, 0) = witt_P1(f).
BiExp witt_taylor(const ParamodularSeries& f, long n);

/// Pullback to the Humbert surface H4: the monomial at (a,b,c) lands on
/// the exponent pair (2a + b + Nc/2, c/2), grain 2. The trusted window
/// is the largest rectangle whose fibers stay inside the box.
BiExp pullback_P4(const ParamodularSeries& f);

/// P4 of the Gritsenko lift computed straight from Jacobi data, using
/// coefficient class reduction to reach every fiber member. Throws
/// TruncationError when the data cannot cover the requested window.
BiExp pullback_P4_lift(const JacobiFormData& phi, const Rational& trunc1,
                       const Rational& trunc2);

/// Pullback to H5 (level 5 only): exponent xi = a + b/2 + 3c/2
/// - ((b+5c)/10) sqrt(5), truncated by trace.
QuadPairExp pullback_P5(const ParamodularSeries& f);

/// Pullback to H8 (level 7 only): exponent xi = a + b/2 + 2c
/// + ((2c-a)/4) sqrt(2), truncated by trace.
QuadPairExp pullback_P8(const ParamodularSeries& f);

}  // namespace pmf
