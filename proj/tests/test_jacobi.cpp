#include <doctest.h>

#include <sstream>

#include "pmf/jacobi.hpp"
#include "test_util.hpp"

using namespace pmf;

#ifndef PARAMOD_TEST_DATA
#define PARAMOD_TEST_DATA "data"
#endif

namespace {
const std::string kData = PARAMOD_TEST_DATA;
}

TEST_CASE("parsing a shipped coefficient file") {
  JacobiFormData g6 = parse_jacobi_file(kData + "/level5/g6.jf");
  CHECK(g6.weight() == 6);
  CHECK(g6.index() == 5);
  CHECK(g6.max_n() == 2);
  CHECK(g6.c(1, 4) == 1);
  CHECK(g6.c(1, 0) == -50);
  // Even weight: symmetric in the sign of r.
  CHECK(g6.c(1, -4) == g6.c(1, 4));
  // Elliptic reduction: (2, 6) and (1, -4) share the class invariant.
  CHECK(g6.c(2, 6) == g6.c(1, 4));
  // Support bound: 4Nn < r^2 forces zero.
  CHECK(g6.c(1, 5) == 0);
  CHECK(g6.c(0, 0) == 0);
  CHECK_THROWS_AS(g6.c(3, 0), TruncationError);
}

TEST_CASE("odd weight flips sign under r -> -r") {
  JacobiFormData g7 = parse_jacobi_file(kData + "/level5/g7.jf");
  CHECK(g7.weight() == 7);
  CHECK(g7.c(1, 1) == -46);
  CHECK(g7.c(1, -1) == 46);
  // Classes with r = 0 mod N are killed by parity.
  CHECK(g7.c(1, 0) == 0);
  CHECK(g7.c(2, 5) == 0);
}

TEST_CASE("insert validates support, parity and duplicates") {
  JacobiFormData even(6, 5, "synthetic");
  CHECK_THROWS_AS(even.insert(1, 5, Rational(1)), DataError);  // r^2 > 4Nn
  CHECK_THROWS_AS(even.insert(-1, 0, Rational(1)), DataError);
  CHECK_THROWS_AS(even.insert(1, -1, Rational(1)), DataError);
  even.insert(1, 1, Rational(3));
  CHECK_THROWS_AS(even.insert(1, 1, Rational(4)), DataError);

  JacobiFormData odd(7, 5, "synthetic");
  CHECK_THROWS_AS(odd.insert(1, 0, Rational(1)), DataError);   // parity at r = 0
  CHECK_THROWS_AS(odd.insert(2, 5, Rational(1)), DataError);   // parity at r = N
  odd.insert(1, 1, Rational(2));
}

TEST_CASE("trust_to demands class-consistent rows") {
  // (3, 3) reduces to (1, 1) at index 1; leaving it absent while (1, 1)
  // is nonzero is an inconsistency once row 3 is trusted.
  JacobiFormData f(6, 1, "synthetic");
  f.insert(1, 1, Rational(5));
  f.trust_to(2);
  CHECK(f.c(1, 1) == 5);
  CHECK_THROWS_AS(f.trust_to(3), DataError);

  JacobiFormData g(6, 1, "synthetic");
  g.insert(1, 1, Rational(5));
  g.insert(3, 3, Rational(7));  // wrong value for the same class
  CHECK_THROWS_AS(g.trust_to(3), DataError);

  JacobiFormData h(6, 1, "synthetic");
  h.insert(1, 1, Rational(5));
  h.insert(3, 3, Rational(5));
  h.insert(2, 2, Rational(0));
  h.trust_to(3);
  CHECK(h.c(3, -3) == 5);
}

TEST_CASE("parser rejects malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_jacobi(in);
  };
  CHECK_THROWS_AS(parse("index 5\n1 1 2\n"), DataError);       // missing weight
  CHECK_THROWS_AS(parse("weight 6\nindex 5\n1 x 2\n"), DataError);
  CHECK_THROWS_AS(parse("weight 6\nindex 5\n1 1 2 9\n"), DataError);
  CHECK_THROWS_AS(parse("weight 6\nindex 0\n"), DataError);
  JacobiFormData ok = parse("weight 6\nindex 5\nsource unit test\n1 1 2\n");
  CHECK(ok.source() == "unit test");
  CHECK(ok.c(1, 1) == 2);
}

TEST_CASE("random class-consistent tables reduce coherently") {
  pmf_test::Rng rng(404);
  for (int trial = 0; trial < 20; ++trial) {
    long index = pmf_test::rand_int(rng, 1, 6);
    long weight = pmf_test::rand_int(rng, 4, 9);
    JacobiFormData f = pmf_test::rand_jacobi(rng, weight, index, 3);
    long sign = weight % 2 == 0 ? 1 : -1;
    for (long n = 0; n <= 3; ++n) {
      long rmax = static_cast<long>(isqrt(Integer(4 * index * n)).get_si());
      for (long r = 0; r <= rmax; ++r) {
        CHECK(f.c(n, -r) == Rational(sign) * f.c(n, r));
        // Index shift r -> r + 2N changes n by r + N, same class.
        long n2 = n + r + index;
        if (n2 <= 3) CHECK(f.c(n2, r + 2 * index) == f.c(n, r));
      }
    }
  }
}
