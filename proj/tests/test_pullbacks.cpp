#include <doctest.h>

#include "pmf/pullbacks.hpp"
#include "test_util.hpp"

using namespace pmf;
using pmf_test::Rng;

TEST_CASE("witt_taylor against a direct b-sum oracle") {
  Rng rng(91);
  for (int trial = 0; trial < 15; ++trial) {
    long level = pmf_test::rand_int(rng, 1, 6);
    ParamodularSeries f =
        pmf_test::rand_paramodular(rng, level, pmf_test::rand_int(rng, 4, 8), 2, 2);
    for (long n : {0L, 1L, 2L, 3L}) {
      BiExp m = witt_taylor(f, n);
      CHECK(m.trunc1() == 3);
      CHECK(m.trunc2() == 3);
      for (long a = 0; a <= 2; ++a)
        for (long c = 0; c <= 2; ++c) {
          Rational expect(0);
          long bmax =
              static_cast<long>(isqrt(Integer(4 * level * a * c)).get_si());
          for (long b = -bmax; b <= bmax; ++b) {
            Rational bp(1);
            for (long i = 0; i < n; ++i) bp *= b;
            expect += bp * f.coeff(a, b, c);
          }
          CHECK(m.coeff(Rational(a), Rational(c)) == expect);
        }
    }
  }
}

TEST_CASE("odd Taylor moments of Fricke-symmetric diagonals vanish") {
  // A series invariant under b -> -b has zero odd moments.
  ParamodularSeries f(5, 6, 1, 1);
  f.set(1, 2, 1, Rational(3));
  f.set(1, -2, 1, Rational(3));
  f.set(1, 0, 1, Rational(-7));
  CHECK(witt_taylor(f, 1).is_zero());
  CHECK(witt_taylor(f, 3).is_zero());
  CHECK(witt_taylor(f, 2).coeff(Rational(1), Rational(1)) == 24);
}

TEST_CASE("pullback_P4 lands monomials on the mapped exponents") {
  Rng rng(92);
  for (int trial = 0; trial < 15; ++trial) {
    long level = 2 * pmf_test::rand_int(rng, 0, 3) + 1;  // odd
    ParamodularSeries f =
        pmf_test::rand_paramodular(rng, level, pmf_test::rand_int(rng, 4, 8), 2, 2);
    BiExp p = pullback_P4(f);
    CHECK(p.trunc2() == rational(3, 2));
    // Accumulate the expected image over the whole box and compare inside
    // the certified window.
    std::map<std::pair<Rational, Rational>, Rational> expect;
    for (const auto& [key, v] : f.terms()) {
      auto [a, c, b] = key;
      Rational x = Rational(2 * a + b) + rational(level * c, 2);
      Rational y = rational(c, 2);
      expect[{x, y}] += v;
    }
    for (Rational y(0); y < p.trunc2(); y += rational(1, 2))
      for (Rational x(0); x < p.trunc1(); x += rational(1, 2)) {
        Rational want(0);
        if (auto it = expect.find({x, y}); it != expect.end()) want = it->second;
        CHECK(p.coeff(x, y) == want);
      }
  }
  ParamodularSeries even_level(2, 4, 1, 1);
  CHECK_THROWS_AS(pullback_P4(even_level), std::invalid_argument);
}

TEST_CASE("pullback_P5 accumulates totally positive exponents by trace") {
  Rng rng(93);
  ParamodularSeries f = pmf_test::rand_paramodular(rng, 5, 6, 2, 2, 14);
  QuadPairExp p = pullback_P5(f);
  CHECK(p.disc() == 5);
  std::map<QuadRational, Rational> expect;
  for (const auto& [key, v] : f.terms()) {
    auto [a, c, b] = key;
    Rational re = Rational(a) + rational(b, 2) + rational(3 * c, 2);
    Rational im = rational(-(b + 5 * c), 10);
    QuadRational xi = im == 0 ? QuadRational(re) : QuadRational(re, im, 5);
    // Koecher support makes every image exponent totally nonnegative.
    CHECK(xi.sign() >= 0);
    CHECK(xi.conjugate().sign() >= 0);
    if (xi.trace() < p.trunc()) expect[xi] += v;
  }
  for (const auto& [xi, v] : expect) CHECK(p.coeff(xi) == v);
  for (const auto& [xi, v] : p.terms()) CHECK(expect[xi] == v);
  ParamodularSeries wrong(7, 6, 1, 1);
  CHECK_THROWS_AS(pullback_P5(wrong), std::invalid_argument);
}

TEST_CASE("pullback_P8 accumulates exponents in Q(sqrt 2) by trace") {
  Rng rng(94);
  ParamodularSeries f = pmf_test::rand_paramodular(rng, 7, 6, 2, 2, 14);
  QuadPairExp p = pullback_P8(f);
  CHECK(p.disc() == 2);
  std::map<QuadRational, Rational> expect;
  for (const auto& [key, v] : f.terms()) {
    auto [a, c, b] = key;
    Rational re = Rational(a) + rational(b, 2) + Rational(2 * c);
    Rational im = rational(2 * c - a, 4);
    QuadRational xi = im == 0 ? QuadRational(re) : QuadRational(re, im, 2);
    CHECK(xi.sign() >= 0);
    CHECK(xi.conjugate().sign() >= 0);
    CHECK(xi.trace() == Rational(2 * a + b + 4 * c));
    if (xi.trace() < p.trunc()) expect[xi] += v;
  }
  for (const auto& [xi, v] : expect) CHECK(p.coeff(xi) == v);
  for (const auto& [xi, v] : p.terms()) CHECK(expect[xi] == v);
  ParamodularSeries wrong(5, 6, 1, 1);
  CHECK_THROWS_AS(pullback_P8(wrong), std::invalid_argument);
}
