#include <doctest.h>

#include "pmf/classical.hpp"
#include "pmf/paramodular.hpp"
#include "test_util.hpp"

using namespace pmf;
using pmf_test::Rng;

#ifndef PARAMOD_TEST_DATA
#define PARAMOD_TEST_DATA "data"
#endif

namespace {

const std::string kData = PARAMOD_TEST_DATA;

// Independent divisor-sum oracle for the interior lift coefficients.
Rational lift_oracle(const JacobiFormData& phi, long a, long b, long c) {
  long k = phi.weight();
  long babs = b < 0 ? -b : b;
  long g = static_cast<long>(
      gcd3(Integer(a), Integer(babs), Integer(c)).get_si());
  Rational acc(0);
  for (long d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    Integer dk;
    mpz_pow_ui(dk.get_mpz_t(), Integer(d).get_mpz_t(),
               static_cast<unsigned long>(k - 1));
    acc += Rational(dk) * phi.c(a * c / (d * d), b / d);
  }
  return acc;
}

}  // namespace

TEST_CASE("lift coefficients match the divisor-sum oracle on random data") {
  Rng rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    long index = pmf_test::rand_int(rng, 1, 6);
    long weight = pmf_test::rand_int(rng, 4, 10);
    JacobiFormData phi = pmf_test::rand_jacobi(rng, weight, index, 4);
    for (long a = 1; a <= 4; ++a)
      for (long c = 1; a * c <= 4; ++c) {
        long bmax =
            static_cast<long>(isqrt(Integer(4 * index * a * c)).get_si());
        for (long b = -bmax; b <= bmax; ++b)
          CHECK(lift_coefficient(phi, a, b, c) == lift_oracle(phi, a, b, c));
      }
    // Boundary rows: sigma_{k-1} against a fresh divisor enumeration.
    for (long a = 1; a <= 3; ++a) {
      Rational expect(0);
      if (weight % 2 == 0) {
        Integer s(0);
        for (long d = 1; d <= a; ++d)
          if (a % d == 0) {
            Integer p;
            mpz_pow_ui(p.get_mpz_t(), Integer(d).get_mpz_t(),
                       static_cast<unsigned long>(weight - 1));
            s += p;
          }
        expect = phi.c(0, 0) * Rational(s);
      }
      CHECK(lift_coefficient(phi, a, 0, 0) == expect);
      CHECK(lift_coefficient(phi, 0, 0, a) == expect);
    }
    if (weight % 2 == 0)
      CHECK(lift_coefficient(phi, 0, 0, 0) ==
            -bernoulli(weight) / Rational(2 * weight) * phi.c(0, 0));
  }
}

TEST_CASE("the gcd > 1 branch of the lift on shipped data") {
  JacobiFormData g6 = parse_jacobi_file(kData + "/level5/g6.jf");
  // alpha(2, 2, 1) has gcd 1: the single class value.
  CHECK(lift_coefficient(g6, 2, 2, 1) == g6.c(2, 2));
  // alpha(1, 4, 1) sits on the support boundary.
  CHECK(lift_coefficient(g6, 1, 4, 1) == 1);
  // alpha(2, 2, 2) needs c(4, 2), whose class lives in row 4: beyond the
  // shipped table, so the truncation must be reported rather than guessed.
  CHECK_THROWS_AS(lift_coefficient(g6, 2, 2, 2), TruncationError);
  // On a deeper synthetic table the d in {1, 2} divisor sum is explicit.
  Rng rng(75);
  JacobiFormData deep = pmf_test::rand_jacobi(rng, 6, 5, 4);
  CHECK(lift_coefficient(deep, 2, 2, 2) ==
        deep.c(4, 2) + Rational(32) * deep.c(1, 1));
}

TEST_CASE("gritsenko_lift fills its box with lift coefficients") {
  Rng rng(72);
  JacobiFormData phi = pmf_test::rand_jacobi(rng, 6, 3, 4);
  ParamodularSeries f = gritsenko_lift(phi, 2, 2);
  CHECK(f.level() == 3);
  CHECK(f.weight() == 6);
  for (long a = 0; a <= 2; ++a)
    for (long c = 0; c <= 2; ++c) {
      long bmax = static_cast<long>(isqrt(Integer(12 * a * c)).get_si());
      for (long b = -bmax; b <= bmax; ++b)
        CHECK(f.coeff(a, b, c) == lift_coefficient(phi, a, b, c));
    }
}

TEST_CASE("series accessors enforce the box and the support cone") {
  ParamodularSeries f(5, 6, 1, 1);
  CHECK_THROWS_AS(f.set(2, 0, 0, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(f.set(1, 5, 1, Rational(1)), std::invalid_argument);
  f.set(1, 4, 1, Rational(3));
  CHECK(f.coeff(1, 4, 1) == 3);
  CHECK(f.coeff(1, 5, 1) == 0);  // support violation reads as exact zero
  CHECK_THROWS_AS(f.coeff(2, 0, 0), TruncationError);
}

TEST_CASE("product of paramodular series against a convolution oracle") {
  Rng rng(73);
  ParamodularSeries f = pmf_test::rand_paramodular(rng, 5, 4, 1, 1);
  ParamodularSeries g = pmf_test::rand_paramodular(rng, 5, 6, 1, 1);
  ParamodularSeries h = f * g;
  CHECK(h.weight() == 10);
  for (long a = 0; a <= 1; ++a)
    for (long c = 0; c <= 1; ++c) {
      long bmax = static_cast<long>(isqrt(Integer(20 * a * c)).get_si());
      for (long b = -bmax; b <= bmax; ++b) {
        Rational expect(0);
        for (long a1 = 0; a1 <= a; ++a1)
          for (long c1 = 0; c1 <= c; ++c1) {
            long b1max =
                static_cast<long>(isqrt(Integer(20 * a1 * c1)).get_si());
            for (long b1 = -b1max; b1 <= b1max; ++b1)
              expect += f.coeff(a1, b1, c1) * g.coeff(a - a1, b - b1, c - c1);
          }
        CHECK(h.coeff(a, b, c) == expect);
      }
    }
}

TEST_CASE("fricke_permute transposes the outer indices") {
  Rng rng(74);
  ParamodularSeries f = pmf_test::rand_paramodular(rng, 5, 8, 2, 2);
  ParamodularSeries g = fricke_permute(f);
  for (const auto& [key, v] : f.terms()) {
    auto [a, c, b] = key;
    CHECK(g.coeff(c, -b, a) == v);
  }
  CHECK(fricke_permute(g) == f);
  ParamodularSeries asym(5, 8, 2, 1);
  CHECK_THROWS_AS(fricke_permute(asym), std::invalid_argument);
}

TEST_CASE("fricke_eigenvalue classifies eigenforms") {
  ParamodularSeries plus(5, 6, 1, 1);
  plus.set(1, 0, 1, Rational(2));
  plus.set(0, 0, 0, Rational(1));
  CHECK(fricke_eigenvalue(plus) == 1);

  ParamodularSeries minus(5, 7, 1, 1);
  minus.set(1, 1, 1, Rational(2));
  minus.set(1, -1, 1, Rational(-2));
  CHECK(fricke_eigenvalue(minus) == -1);

  ParamodularSeries neither(5, 6, 1, 1);
  neither.set(1, 0, 0, Rational(1));
  CHECK(!fricke_eigenvalue(neither).has_value());
}

TEST_CASE("the paramodular Eisenstein series is normalized") {
  // The shipped Eisenstein data carries the constant row only, which is
  // all the boundary rows alpha(a, 0, 0) need.
  JacobiFormData e4 = parse_jacobi_file(kData + "/level5/e4.jf");
  ParamodularSeries e = eisenstein_paramodular(e4, 2, 0);
  CHECK(e.coeff(0, 0, 0) == 1);
  CHECK(e.coeff(1, 0, 0) == 240);   // 240 sigma_3(1)
  CHECK(e.coeff(2, 0, 0) == 2160);  // 240 sigma_3(2)
  JacobiFormData odd(7, 5, "synthetic");
  CHECK_THROWS_AS(eisenstein_paramodular(odd, 1, 1), std::invalid_argument);
}
