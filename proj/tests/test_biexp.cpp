#include <doctest.h>

#include "pmf/biexp.hpp"
#include "test_util.hpp"

using namespace pmf;
using pmf_test::Rng;

TEST_CASE("tensor multiplies coefficients componentwise") {
  QExp x(1, Rational(3)), y(2, Rational(2));
  x.set(Rational(0), Rational(2));
  x.set(Rational(2), Rational(-3));
  y.set(rational(1, 2), Rational(5));
  BiExp t = tensor(x, y);
  CHECK(t.trunc1() == 3);
  CHECK(t.trunc2() == 2);
  CHECK(t.coeff(Rational(0), rational(1, 2)) == 10);
  CHECK(t.coeff(Rational(2), rational(1, 2)) == -15);
  CHECK(t.coeff(Rational(1), rational(1, 2)) == 0);
}

TEST_CASE("boundary_slice extracts the q^0 rows") {
  Rng rng(31);
  QExp x = pmf_test::rand_qexp(rng, 2, Rational(3));
  QExp y = pmf_test::rand_qexp(rng, 2, Rational(3));
  BiExp t = tensor(x, y);
  QExp s1 = boundary_slice(t, 1);  // q1^0: x(0) * y
  QExp s2 = boundary_slice(t, 2);  // q2^0: y(0) * x
  CHECK(QExp::agree(s1, x.coeff(Rational(0)) * y));
  CHECK(QExp::agree(s2, y.coeff(Rational(0)) * x));
}

TEST_CASE("diagonal restriction sums antidiagonals") {
  Rng rng(32);
  BiExp t = pmf_test::rand_biexp(rng, 2, 2, Rational(3), Rational(3));
  QExp d = diagonal(t);
  Rational step(1, 2);
  for (Rational w(0); w < d.trunc(); w += step) {
    Rational expect(0);
    for (const auto& [key, c] : t.terms())
      if (key.e1 + key.e2 == w) expect += c;
    CHECK(d.coeff(w) == expect);
  }
}

TEST_CASE("swap exchanges the variables") {
  Rng rng(33);
  BiExp t = pmf_test::rand_biexp(rng, 1, 2, Rational(4), Rational(3));
  BiExp s = t.swap();
  CHECK(s.trunc1() == t.trunc2());
  CHECK(s.grain1() == t.grain2());
  for (const auto& [key, c] : t.terms()) CHECK(s.coeff(key.e2, key.e1) == c);
  CHECK(s.swap() == t);
}

TEST_CASE("two-variable product matches a convolution oracle") {
  Rng rng(34);
  for (int trial = 0; trial < 10; ++trial) {
    BiExp x = pmf_test::rand_biexp(rng, 2, 2, Rational(3), Rational(3));
    BiExp y = pmf_test::rand_biexp(rng, 2, 2, Rational(3), Rational(3));
    BiExp z = x * y;
    Rational step(1, 2);
    for (Rational e1(0); e1 < z.trunc1(); e1 += step)
      for (Rational e2(0); e2 < z.trunc2(); e2 += step) {
        Rational expect(0);
        for (const auto& [key, c] : x.terms())
          if (key.e1 <= e1 && key.e2 <= e2)
            expect += c * y.coeff(e1 - key.e1, e2 - key.e2);
        CHECK(z.coeff(e1, e2) == expect);
      }
  }
}

TEST_CASE("two-variable divide inverts multiplication") {
  Rng rng(35);
  for (int trial = 0; trial < 10; ++trial) {
    BiExp x = pmf_test::rand_biexp(rng, 2, 2, Rational(3), Rational(3));
    BiExp den = pmf_test::rand_biexp(rng, 2, 2, Rational(3), Rational(3));
    den.set(Rational(0), Rational(0), Rational(1));
    CHECK(BiExp::agree(divide(x * den, den), x));
  }
}

TEST_CASE("coefficient queries outside the trusted window throw") {
  BiExp x(1, 1, Rational(2), Rational(2));
  x.set(Rational(1), Rational(0), Rational(4));
  CHECK(x.coeff(Rational(1), Rational(1)) == 0);
  CHECK_THROWS_AS(x.coeff(Rational(2), Rational(0)), TruncationError);
  CHECK_THROWS_AS(x.coeff(Rational(0), Rational(2)), TruncationError);
}
