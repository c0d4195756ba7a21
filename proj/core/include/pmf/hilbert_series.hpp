#pragma once

#include <vector>

#include "pmf/rational.hpp"

namespace pmf {

/// Integer polynomial in t, coefficient of t^i at position i.
using IntPoly = std::vector<Integer>;

/// Rational function numerator / prod (1 - t^d) over the listed d.
struct HilbertSeries {
  IntPoly numerator;
  std::vector<long> denominator_factors;
};

/// Coefficients of t^0 .. t^kmax by exact power-series division.
std::vector<Integer> hilbert_expand(const HilbertSeries& h, long kmax);

/// Coefficient sequence equals its reverse.
bool palindrome_test(const IntPoly& p);

/// Greedy exact division by cyclotomic polynomials reaches 1.
bool cyclotomic_product_test(const IntPoly& p);

/// The n-th cyclotomic polynomial.
IntPoly cyclotomic(long n);

IntPoly poly_mul(const IntPoly& x, const IntPoly& y);
/// Exact quotient, or empty when the division has a remainder.
IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den);

}  // namespace pmf
