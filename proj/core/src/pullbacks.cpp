#include "pmf/pullbacks.hpp"

namespace pmf {

namespace {

long isqrt_l(long n) { return static_cast<long>(isqrt(Integer(n)).get_si()); }

// Smallest P4 image exponent 2a + b + Nc/2 over admissible b.
Rational p4_xmin(long level, long a, long c) {
  return Rational(2 * a) + Rational(level * c, 2) -
         Rational(isqrt_l(4 * level * a * c));
}

// Smallest trace 2a + b + mc over admissible b, for m = 3 (P5) or 4 (P8).
long trace_min(long level, long m, long a, long c) {
  return 2 * a + m * c - isqrt_l(4 * level * a * c);
}

// Largest trace window certified by the box: every Koecher triple of
// smaller trace lies inside it. The per-(a,c) minimum is convex, so short
// scans around the analytic minimum find the exact bound.
Rational quad_trace_window(long level, long m, long amax, long cmax) {
  long best = -1;
  auto consider = [&](long a, long c) {
    long t = trace_min(level, m, a, c);
    if (best < 0 || t < best) best = t;
  };
  // trace_min >= a/m and >= c/2, so both scans terminate once the running
  // minimum beats those lower bounds; the inner ranges cover the convex
  // minimum in the other variable.
  for (long a = amax + 1; best < 0 || a < m * best + m; ++a)
    for (long c = 0; c <= 2 * level * a + 2; ++c) consider(a, c);
  for (long c = cmax + 1; best < 0 || c < 2 * best + 2; ++c)
    for (long a = 0; a <= 2 * level * c + 2; ++a) consider(a, c);
  return Rational(best);
}

}  // namespace

BiExp witt_taylor(const ParamodularSeries& f, long n) {
  if (n < 0) throw std::invalid_argument("negative Taylor order");
  BiExp out(1, 1, Rational(f.amax() + 1), Rational(f.cmax() + 1));
  std::map<BiKey, Rational> acc;
  for (const auto& [k, v] : f.terms()) {
    auto [a, c, b] = k;
    Integer bn;
    mpz_pow_ui(bn.get_mpz_t(), Integer(b).get_mpz_t(),
               static_cast<unsigned long>(n));
    acc[BiKey{Rational(a), Rational(c)}] += Rational(bn) * v;
  }
  for (const auto& [k, v] : acc)
    if (v != 0) out.set(k.e1, k.e2, v);
  return out;
}

BiExp witt_P1(const ParamodularSeries& f) { return witt_taylor(f, 0); }

BiExp pullback_P4(const ParamodularSeries& f) {
  long n = f.level();
  if (n % 2 == 0) throw std::invalid_argument("P4 needs odd level");
  Rational t2 = Rational(f.cmax() + 1, 2);
  t2.canonicalize();
  // For each c the first untrusted row a = amax + 1 caps the x window;
  // x_min grows in a past Nc/4, so a short scan is exact.
  Rational t1(0);
  bool have = false;
  for (long c = 0; c <= f.cmax(); ++c) {
    Rational local(0);
    bool lhave = false;
    long a_hi = std::max(f.amax() + 1, n * c / 4 + 2);
    for (long a = f.amax() + 1; a <= a_hi; ++a) {
      Rational x = p4_xmin(n, a, c);
      if (!lhave || x < local) local = x, lhave = true;
    }
    if (!have || local < t1) t1 = local, have = true;
  }
  BiExp out(2, 2, t1, t2);
  std::map<BiKey, Rational> acc;
  for (const auto& [k, v] : f.terms()) {
    auto [a, c, b] = k;
    Rational x = Rational(2 * a + b) + Rational(n * c, 2);
    Rational y(c, 2);
    x.canonicalize();
    y.canonicalize();
    if (x < t1 && y < t2) acc[BiKey{x, y}] += v;
  }
  for (const auto& [k, v] : acc)
    if (v != 0) out.set(k.e1, k.e2, v);
  return out;
}

BiExp pullback_P4_lift(const JacobiFormData& phi, const Rational& trunc1,
                       const Rational& trunc2) {
  long n = phi.index();
  if (n % 2 == 0) throw std::invalid_argument("P4 needs odd level");
  BiExp out(2, 2, trunc1, trunc2);
  for (Rational y(0); y < trunc2; y += Rational(1, 2)) {
    long c = static_cast<long>(floor_int(y * 2).get_si());
    for (Rational x(0); x < trunc1; x += Rational(1, 2)) {
      Rational acc(0);
      if (c == 0) {
        // Only b = 0 survives the support bound: x = 2a.
        Rational half = x / 2;
        if (is_integer(half))
          acc = lift_coefficient(phi, static_cast<long>(floor_int(half).get_si()),
                                 0, 0);
      } else if (is_integer(x - Rational(n * c, 2))) {
        for (long a = 0;; ++a) {
          if (a > n * c / 4 + 1 && p4_xmin(n, a, c) > x) break;
          Rational br = x - Rational(2 * a) - Rational(n * c, 2);
          long b = static_cast<long>(floor_int(br).get_si());
          acc += lift_coefficient(phi, a, b, c);
        }
      }
      if (acc != 0) out.set(x, y, acc);
    }
  }
  return out;
}

QuadPairExp pullback_P5(const ParamodularSeries& f) {
  if (f.level() != 5) throw std::invalid_argument("P5 needs level 5");
  Rational t = quad_trace_window(5, 3, f.amax(), f.cmax());
  QuadPairExp out(5, t);
  std::map<QuadRational, Rational> acc;
  for (const auto& [k, v] : f.terms()) {
    auto [a, c, b] = k;
    Rational re = Rational(a) + Rational(b, 2) + Rational(3 * c, 2);
    Rational im = Rational(-(b + 5 * c), 10);
    re.canonicalize();
    im.canonicalize();
    QuadRational xi = im == 0 ? QuadRational(re) : QuadRational(re, im, 5);
    if (xi.trace() < t) acc[xi] += v;
  }
  for (const auto& [e, v] : acc)
    if (v != 0) out.set(e, v);
  return out;
}

QuadPairExp pullback_P8(const ParamodularSeries& f) {
  if (f.level() != 7) throw std::invalid_argument("P8 needs level 7");
  Rational t = quad_trace_window(7, 4, f.amax(), f.cmax());
  QuadPairExp out(2, t);
  std::map<QuadRational, Rational> acc;
  for (const auto& [k, v] : f.terms()) {
    auto [a, c, b] = k;
    Rational re = Rational(a) + Rational(b, 2) + Rational(2 * c);
    Rational im = Rational(2 * c - a, 4);
    re.canonicalize();
    im.canonicalize();
    QuadRational xi = im == 0 ? QuadRational(re) : QuadRational(re, im, 2);
    if (xi.trace() < t) acc[xi] += v;
  }
  for (const auto& [e, v] : acc)
    if (v != 0) out.set(e, v);
  return out;
}

}  // namespace pmf
