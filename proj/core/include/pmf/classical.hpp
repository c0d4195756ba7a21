#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pmf/linalg.hpp"
#include "pmf/qexp.hpp"

namespace pmf {

/// A classical one-variable form together with its weight and a label.
/// E2 is quasi-modular; it is exposed only because the genuinely modular
/// combinations e1, e2 are built from it.
struct ClassicalForm {
  long weight;
  QExp expansion;
  std::string label;
};

/// k-th Bernoulli number (k even, k >= 2), by the binomial recurrence.
Rational bernoulli(long k);

/// Sum of k-th powers of positive divisors of n.
Integer sigma(const Integer& n, unsigned long k);

/// E_k(tau) = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n, k even >= 4.
ClassicalForm eisenstein(long k, const Rational& trunc);

/// Quasi-modular E_2(tau) = 1 - 24 sum sigma_1(n) q^n.
ClassicalForm eisenstein2(const Rational& trunc);

/// e1(tau) = 2 E_2(2 tau) - E_2(tau), integer exponent grain.
ClassicalForm gamma2_e1(const Rational& trunc);

/// e2(tau) = E_2(tau) - (1/2) E_2(tau/2), exponent grain 2.
ClassicalForm gamma2_e2(const Rational& trunc);

/// eta(tau)^m, leading exponent m/24; m = 24 gives Delta.
ClassicalForm eta_power(long m, const Rational& trunc);

/// Coordinates of f in the basis {E4^a E6^b : 4a+6b = k} if it lies in
/// the span up to truncation; nullopt when it provably does not. Demands
/// strictly more coefficient slots than monomials, else TruncationError.
std::optional<RatVec> level1_membership(const QExp& f, long k);

}  // namespace pmf
