#include "pmf/rational.hpp"

namespace pmf {

std::string to_string(const Rational& x) { return x.get_str(); }

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw DataError("empty rational literal");
  Rational r;
  if (r.set_str(text, 10) != 0)
    throw DataError("malformed rational literal: '" + text + "'");
  if (r.get_den() == 0) throw DataError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

Integer floor_int(const Rational& x) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return q;
}

Rational pow_rational(const Rational& x, unsigned long n) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), x.get_num_mpz_t(), n);
  mpz_pow_ui(out.get_den_mpz_t(), x.get_den_mpz_t(), n);
  out.canonicalize();
  return out;
}

Integer gcd3(const Integer& a, const Integer& b, const Integer& c) {
  Integer g = gcd(a, b);
  return gcd(g, c);
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

}  // namespace pmf
