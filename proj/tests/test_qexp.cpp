#include <doctest.h>

#include "pmf/qexp.hpp"
#include "test_util.hpp"

using namespace pmf;
using pmf_test::Rng;

TEST_CASE("QExp product matches a dense convolution oracle") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    long g = pmf_test::rand_int(rng, 1, 3);
    Rational t(pmf_test::rand_int(rng, 3, 5));
    QExp x = pmf_test::rand_qexp(rng, g, t);
    QExp y = pmf_test::rand_qexp(rng, g, t);
    QExp z = x * y;
    Rational step(1, g);
    step.canonicalize();
    for (Rational e(0); e < z.trunc(); e += step) {
      // Sum over stored terms of x: the product window guarantees the
      // complementary exponent stays inside y's window.
      Rational expect(0);
      for (const auto& [e1, c1] : x.terms())
        if (e1 <= e) expect += c1 * y.coeff(e - e1);
      CHECK(z.coeff(e) == expect);
    }
  }
}

TEST_CASE("QExp coefficient queries beyond the window throw") {
  QExp x(2, Rational(3));
  x.set(rational(1, 2), Rational(5));
  CHECK(x.coeff(rational(1, 2)) == 5);
  CHECK(x.coeff(rational(3, 2)) == 0);
  CHECK_THROWS_AS(x.coeff(Rational(3)), TruncationError);
  CHECK_THROWS_AS(x.coeff(Rational(4)), TruncationError);
  CHECK_THROWS_AS(x.set(rational(1, 3), Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(x.set(Rational(3), Rational(1)), std::invalid_argument);
}

TEST_CASE("QExp min_exponent and window_exponents") {
  QExp x(2, Rational(2));
  CHECK_THROWS(x.min_exponent());
  x.set(rational(3, 2), Rational(1));
  x.set(rational(1, 2), Rational(2));
  CHECK(x.min_exponent() == rational(1, 2));
  CHECK(x.window_exponents().size() == 4);
  CHECK(x.window_exponents(Rational(1)).size() == 2);
}

TEST_CASE("divide inverts multiplication") {
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    long g = pmf_test::rand_int(rng, 1, 2);
    Rational t(pmf_test::rand_int(rng, 4, 6));
    QExp x = pmf_test::rand_qexp(rng, g, t);
    QExp den = pmf_test::rand_qexp(rng, g, t);
    den.set(Rational(0), Rational(1));  // make the leading term invertible
    CHECK(QExp::agree(divide(x * den, den), x));
  }
  QExp zero(1, Rational(4));
  CHECK_THROWS(divide(zero, zero));
}

TEST_CASE("substitution maps exponents exactly") {
  QExp x(2, Rational(2));
  x.set(rational(1, 2), Rational(3));
  x.set(Rational(1), Rational(-4));

  QExp up = substitute_scale_up(x, 2);
  CHECK(up.trunc() == 4);
  CHECK(up.coeff(Rational(1)) == 3);
  CHECK(up.coeff(Rational(2)) == -4);

  QExp down = substitute_scale_down(x, 2);
  CHECK(down.trunc() == 1);
  CHECK(down.coeff(rational(1, 4)) == 3);
  CHECK(down.coeff(rational(1, 2)) == -4);
}

TEST_CASE("phase twist flips half-integral exponents only") {
  QExp x(2, Rational(3));
  x.set(rational(1, 2), Rational(5));
  x.set(Rational(1), Rational(7));
  x.set(rational(5, 2), Rational(-2));
  QExp tw = phase_twist_T(x);
  CHECK(tw.coeff(rational(1, 2)) == -5);
  CHECK(tw.coeff(Rational(1)) == 7);
  CHECK(tw.coeff(rational(5, 2)) == 2);
  // Applying the shift twice restores the series.
  CHECK(phase_twist_T(tw) == x);
}

TEST_CASE("agree compares only the overlap window") {
  QExp x(1, Rational(5)), y(1, Rational(3));
  x.set(Rational(1), Rational(2));
  x.set(Rational(4), Rational(9));  // outside y's window
  y.set(Rational(1), Rational(2));
  CHECK(QExp::agree(x, y));
  y.set(Rational(2), Rational(1));
  CHECK(!QExp::agree(x, y));
}
