#include "pmf/suites.hpp"

#include <functional>

#include "pmf/classical.hpp"
#include "pmf/deghilb.hpp"
#include "pmf/grading.hpp"
#include "pmf/hilbert_series.hpp"
#include "pmf/jacobi.hpp"
#include "pmf/paramodular.hpp"
#include "pmf/pullbacks.hpp"

namespace pmf {

namespace {

struct CheckFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& witness) {
  if (!ok) throw CheckFailure(witness);
}

void run_check(SuiteResult& suite, const std::string& id,
               const std::function<void()>& body) {
  try {
    body();
    suite.checks.push_back({id, CheckStatus::pass, ""});
  } catch (const TruncationError& e) {
    suite.checks.push_back({id, CheckStatus::undecided, e.what()});
  } catch (const CheckFailure& e) {
    suite.checks.push_back({id, CheckStatus::fail, e.what()});
  } catch (const DataError&) {
    throw;
  } catch (const std::exception& e) {
    suite.checks.push_back({id, CheckStatus::fail, e.what()});
  }
}

/// agree() plus a guarantee that the shared window actually covers
/// exponents up to the stated bound.
void require_agree_to(const QExp& x, const QExp& y, const Rational& bound,
                      const std::string& what) {
  if (std::min(x.trunc(), y.trunc()) < bound)
    throw TruncationError(what + ": window below required bound");
  require(QExp::agree(x, y), what + ": series disagree");
}

void require_agree_to(const BiExp& x, const BiExp& y, const Rational& bound,
                      const std::string& what) {
  Rational t = std::min(std::min(x.trunc1(), y.trunc1()),
                        std::min(x.trunc2(), y.trunc2()));
  if (t < bound) throw TruncationError(what + ": window below required bound");
  require(BiExp::agree(x, y), what + ": series disagree");
}

}  // namespace

bool SuiteResult::all_pass() const {
  for (const auto& c : checks)
    if (c.status != CheckStatus::pass) return false;
  return true;
}

bool SuiteResult::any_fail() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return true;
  return false;
}

// ---------------------------------------------------------------- classical

SuiteResult suite_classical() {
  SuiteResult suite{"classical", {}};

  run_check(suite, "eisenstein-divisor-sums", [] {
    for (long k : {4L, 6L, 10L}) {
      ClassicalForm e = eisenstein(k, Rational(20));
      Rational factor = Rational(-2 * k) / bernoulli(k);
      for (long n = 1; n < 20; ++n) {
        Integer s(0);
        for (long d = 1; d <= n; ++d)
          if (n % d == 0) {
            Integer p(1);
            for (long i = 0; i + 1 < k; ++i) p *= d;
            s += p;
          }
        require(e.expansion.coeff(Rational(n)) == factor * Rational(s),
                "E_" + std::to_string(k) + " coefficient at n=" +
                    std::to_string(n));
      }
    }
  });

  run_check(suite, "eta24-inverse-roundtrip", [] {
    QExp one(1, Rational(20));
    one.set(Rational(0), Rational(1));
    QExp delta = eta_power(24, Rational(20)).expansion;
    QExp inv = divide(one, delta);
    require_agree_to(delta * inv, one, Rational(19), "eta^24 * (1/eta^24)");
  });

  run_check(suite, "eta12-gamma2-factorization", [] {
    Rational t(20);
    QExp lhs = eta_power(12, t).expansion;
    QExp e1 = gamma2_e1(t).expansion;
    QExp e2 = gamma2_e2(t).expansion;
    QExp rhs = Rational(1, 54) *
               ((e1 + e2) * (Rational(2) * e1 - e2) * (Rational(2) * e2 - e1));
    require_agree_to(lhs, rhs, Rational(20), "eta^12 factorization");
  });

  return suite;
}

// ----------------------------------------------------------------- deghilb

SuiteResult suite_deghilb() {
  SuiteResult suite{"deghilb", {}};

  run_check(suite, "delta6-dual-construction", [] {
    require_agree_to(Delta6(Rational(10)).expansion,
                     Delta6_eta(Rational(10)).expansion, Rational(10),
                     "Delta6 constructions");
  });

  run_check(suite, "relation-R-residual-zero", [] {
    require(relation_R_residual(Rational(8)).is_zero(),
            "relation residual nonzero on window (8,8)");
  });

  run_check(suite, "relation-R-perturbation-detected", [] {
    require(!relation_R_residual_perturbed(Rational(8), Rational(4097)).is_zero(),
            "perturbed relation residual unexpectedly zero");
  });

  run_check(suite, "phi-images", [] {
    Rational t(16);
    require_agree_to(phi(1, X2(t)), gamma2_e1(t).expansion, Rational(15),
                     "phi(X2) = e1");
    QExp e1 = gamma2_e1(t).expansion;
    QExp e2 = gamma2_e2(t).expansion;
    QExp half = Rational(1, 2) * e1 - e2;
    require_agree_to(phi(1, X4(t)), Rational(1, 144) * (half * half),
                     Rational(15), "phi(X4) = (1/144)(e1/2 - e2)^2");
    require(phi(1, Delta6(t)).is_zero(), "phi(Delta6) != 0");
    QExp eta8 = eta_power(8, t).expansion;
    require_agree_to(phi(1, X8(t)), eta8 * substitute_scale_up(eta8, 2),
                     Rational(15), "phi1(X8) = eta(t)^8 eta(2t)^8");
  });

  run_check(suite, "phi-homomorphism", [] {
    Rational t(8);
    BiExp prod = X2(t).expansion * X4(t).expansion;
    require(QExp::agree(boundary_slice(prod, 1),
                        phi(1, X2(t)) * phi(1, X4(t))),
            "phi(X2 X4) != phi(X2) phi(X4)");
  });

  run_check(suite, "diagonal-restriction", [] {
    Rational t(10);
    require_agree_to(diagonal(X2(t).expansion),
                     eisenstein(4, t).expansion, Rational(10),
                     "X2 on the diagonal vs E4");
    require_agree_to(diagonal(Delta6(t).expansion),
                     eta_power(24, t).expansion, Rational(10),
                     "Delta6 on the diagonal vs Delta");
  });

  run_check(suite, "product-grading", [] {
    Rational t(6);
    GForm x2 = X2(t), x8 = X8(t), d6 = Delta6(t);
    require(x2.symmetry == Symmetry::symmetric, "X2 not symmetric");
    require(x8.symmetry == Symmetry::antisymmetric, "X8 not antisymmetric");
    GForm p1 = make_gform(x2.weight + x8.weight, x2.expansion * x8.expansion);
    require(p1.symmetry == Symmetry::antisymmetric,
            "symmetric * antisymmetric not antisymmetric");
    GForm p2 = make_gform(2 * x8.weight, x8.expansion * x8.expansion);
    require(p2.symmetry == Symmetry::symmetric,
            "antisymmetric * antisymmetric not symmetric");
    require(d6.symmetry == Symmetry::symmetric, "Delta6 not symmetric");
  });

  run_check(suite, "a-star-membership", [] {
    Rational t(12);
    for (const auto& [label, g] : a_star_generators(t))
      require(a_star_membership(g), label + " rejected from A_*");
    require(!a_star_membership(X2(t)), "X2 accepted into A_*");
  });

  return suite;
}

// ------------------------------------------------------------------ paramod

namespace {

JacobiFormData load_jacobi(const std::string& data_dir, const std::string& rel) {
  try {
    return parse_jacobi_file(data_dir + "/" + rel);
  } catch (const std::exception& e) {
    throw DataError("cannot load " + rel + ": " + e.what());
  }
}

}  // namespace

SuiteResult suite_paramod(const std::string& data_dir) {
  SuiteResult suite{"paramod", {}};

  JacobiFormData g6_5 = load_jacobi(data_dir, "level5/g6.jf");
  JacobiFormData g7_5 = load_jacobi(data_dir, "level5/g7.jf");
  JacobiFormData g8_5 = load_jacobi(data_dir, "level5/g8.jf");
  JacobiFormData g10_5 = load_jacobi(data_dir, "level5/g10.jf");
  JacobiFormData e4_5 = load_jacobi(data_dir, "level5/e4.jf");
  JacobiFormData g5_7 = load_jacobi(data_dir, "level7/g5.jf");
  JacobiFormData g6_7 = load_jacobi(data_dir, "level7/g6.jf");
  JacobiFormData g8_7 = load_jacobi(data_dir, "level7/g8.jf");
  JacobiFormData g10_7 = load_jacobi(data_dir, "level7/g10.jf");

  run_check(suite, "data-headers", [&] {
    auto expect = [](const JacobiFormData& j, long k, long n,
                     const std::string& name) {
      require(j.weight() == k && j.index() == n && j.max_n() >= 2,
              name + ": unexpected weight/index/rows");
    };
    expect(g6_5, 6, 5, "level5/g6");
    expect(g7_5, 7, 5, "level5/g7");
    expect(g8_5, 8, 5, "level5/g8");
    expect(g10_5, 10, 5, "level5/g10");
    expect(g5_7, 5, 7, "level7/g5");
    expect(g6_7, 6, 7, "level7/g6");
    expect(g8_7, 8, 7, "level7/g8");
    expect(g10_7, 10, 7, "level7/g10");
  });

  run_check(suite, "lift-table-values", [&] {
    ParamodularSeries f = gritsenko_lift(g6_5, 2, 1);
    require(f.coeff(1, 4, 1) == 1, "alpha(1,4,1) of the weight-6 lift");
    require(f.coeff(1, 0, 1) == -50, "alpha(1,0,1) of the weight-6 lift");
    require(f.coeff(1, 3, 1) == -2, "alpha(1,3,1) of the weight-6 lift");
    require(f.coeff(2, 2, 1) == -33, "alpha(2,2,1) of the weight-6 lift");
    require(f.coeff(1, 0, 0) == 0, "cusp lift boundary row");
  });

  run_check(suite, "lift-symmetry", [&] {
    for (const JacobiFormData* j :
         {&g6_5, &g7_5, &g8_5, &g10_5, &g5_7, &g6_7, &g8_7, &g10_7}) {
      long n = j->index();
      long bmax = isqrt(Integer(8 * n)).get_si();
      for (long b = -bmax; b <= bmax; ++b)
        require(lift_coefficient(*j, 2, b, 1) == lift_coefficient(*j, 1, b, 2),
                "alpha(2,b,1) != alpha(1,b,2) at b=" + std::to_string(b));
    }
  });

  run_check(suite, "fricke-eigenvalue", [&] {
    auto eig = [](const JacobiFormData& j) {
      return fricke_eigenvalue(gritsenko_lift(j, 1, 1));
    };
    require(eig(g6_5) == std::optional<int>(1), "weight-6 lift eigenvalue");
    require(eig(g7_5) == std::optional<int>(-1), "weight-7 lift eigenvalue");
    require(eig(g8_5) == std::optional<int>(1), "weight-8 lift eigenvalue");
    require(eig(g5_7) == std::optional<int>(-1),
            "level-7 weight-5 lift eigenvalue");
  });

  run_check(suite, "p4-lift-level5", [&] {
    Rational h(1, 2), th(3, 2);
    BiExp p6 = pullback_P4_lift(g6_5, Rational(2), Rational(1));
    require(p6.coeff(h, h) == 2 && p6.coeff(th, h) == -24,
            "weight-6 rows at q2^{1/2}");
    require_agree_to(p6, Rational(2) * Delta6(Rational(2)).expansion,
                     Rational(1), "P4 of the weight-6 lift vs 2 Delta6");
    BiExp p8 = pullback_P4_lift(g8_5, Rational(2), Rational(1));
    require(p8.coeff(h, h) == 2 && p8.coeff(th, h) == 24,
            "weight-8 rows at q2^{1/2}");
    BiExp x2d6 = X2(Rational(2)).expansion * Delta6(Rational(2)).expansion;
    require_agree_to(p8, Rational(2) * x2d6, Rational(1),
                     "P4 of the weight-8 lift vs 2 X2 Delta6");
    BiExp p10 = pullback_P4_lift(g10_5, Rational(2), Rational(1));
    require(p10.coeff(h, h) == 0 && p10.coeff(th, h) == 16,
            "weight-10 rows at q2^{1/2}");
    BiExp x4d6 = X4(Rational(2)).expansion * Delta6(Rational(2)).expansion;
    require_agree_to(p10, Rational(16) * x4d6, Rational(1),
                     "P4 of the weight-10 lift vs 16 X4 Delta6");
  });

  run_check(suite, "p4-lift-level7", [&] {
    Rational h(1, 2), th(3, 2);
    BiExp p6 = pullback_P4_lift(g6_7, Rational(2), Rational(1));
    require(p6.coeff(h, h) == 0 && p6.coeff(th, h) == 0,
            "level-7 weight-6 rows not zero");
    BiExp p8 = pullback_P4_lift(g8_7, Rational(2), Rational(1));
    require(p8.coeff(h, h) == 1 && p8.coeff(th, h) == 12,
            "level-7 weight-8 rows at q2^{1/2}");
    BiExp x2d6 = X2(Rational(2)).expansion * Delta6(Rational(2)).expansion;
    require_agree_to(p8, x2d6, Rational(1),
                     "P4 of the level-7 weight-8 lift vs X2 Delta6");
    BiExp p10 = pullback_P4_lift(g10_7, Rational(2), Rational(1));
    require(p10.coeff(h, h) == 0 && p10.coeff(th, h) == -2,
            "level-7 weight-10 rows at q2^{1/2}");
    BiExp x4d6 = X4(Rational(2)).expansion * Delta6(Rational(2)).expansion;
    require_agree_to(p10, Rational(-2) * x4d6, Rational(1),
                     "P4 of the level-7 weight-10 lift vs -2 X4 Delta6");
  });

  run_check(suite, "p4-lift-consistency", [&] {
    BiExp direct = pullback_P4(gritsenko_lift(g6_5, 2, 1));
    BiExp from_data = pullback_P4_lift(g6_5, Rational(2), Rational(1));
    require(BiExp::agree(direct, from_data),
            "pullback_P4 of the lift vs pullback_P4_lift");
  });

  run_check(suite, "fricke-p4-swap", [&] {
    ParamodularSeries f = gritsenko_lift(g6_5, 1, 1);
    require(BiExp::agree(pullback_P4(fricke_permute(f)),
                         pullback_P4(f).swap()),
            "P4 of the Fricke image vs swapped P4");
  });

  run_check(suite, "p8-coefficient-claim", [&] {
    // The fiber of xi = 1/2 + (1/4) sqrt 2 under the H8 exponent map,
    // intersected with the Koecher support, is computed exhaustively:
    // trace(xi) = 1 bounds a <= 4 and c <= 2.
    QuadRational xi(Rational(1, 2), Rational(1, 4), 2);
    Rational total(0);
    long hits = 0;
    for (long a = 0; a <= 4; ++a)
      for (long c = 0; c <= 2; ++c) {
        long bmax = isqrt(Integer(28 * a * c)).get_si();
        for (long b = -bmax; b <= bmax; ++b) {
          QuadRational e(Rational(a) + rational(b, 2) + Rational(2 * c),
                         rational(2 * c - a, 4), 2);
          if (e == xi) {
            total += lift_coefficient(g5_7, a, b, c);
            ++hits;
          }
        }
      }
    require(hits == 1, "H8 fiber of xi is not a singleton");
    require(total == g5_7.c(1, -5),
            "coefficient at q1^{1/2 + 1/sqrt8} differs from c(1,-5)");
  });

  run_check(suite, "diagonal-moments-weight7", [&] {
    ParamodularSeries f = gritsenko_lift(g7_5, 1, 1);
    require(witt_taylor(f, 1).coeff(Rational(1), Rational(1)) == 0,
            "first moment at (1,1) nonzero");
    require(witt_taylor(f, 3).coeff(Rational(1), Rational(1)) == 0,
            "third moment at (1,1) nonzero");
    require(witt_taylor(f, 5).coeff(Rational(1), Rational(1)) == -2880,
            "fifth moment at (1,1) wrong");
  });

  run_check(suite, "eisenstein-product", [&] {
    ParamodularSeries e4 = eisenstein_paramodular(e4_5, 2, 0);
    require(e4.coeff(1, 0, 0) == 240 && e4.coeff(2, 0, 0) == 2160,
            "paramodular Eisenstein boundary rows");
    ParamodularSeries sq = e4 * e4;
    require(sq.coeff(1, 0, 0) == 480 && sq.coeff(2, 0, 0) == 61920,
            "square of the Eisenstein series (E4^2 = E8 rows)");
  });

  return suite;
}

// ---------------------------------------------------------------- sympcheck

namespace {

Mat4 mat4_from_rows(std::array<std::array<Rational, 4>, 4> rows) { return rows; }

const std::vector<std::pair<ComplexRational, ComplexRational>>& sample_points() {
  static const std::vector<std::pair<ComplexRational, ComplexRational>> pts = {
      {{Rational(1, 3), Rational(2)}, {Rational(1, 5), Rational(3)}},
      {{Rational(-1, 2), Rational(1)}, {Rational(2, 7), Rational(2)}},
      {{Rational(2, 5), Rational(5)}, {Rational(-3, 4), Rational(1)}},
      {{Rational(0), Rational(1)}, {Rational(1, 2), Rational(7, 2)}},
      {{Rational(3, 7), Rational(3, 2)}, {Rational(-1, 3), Rational(4)}},
      {{Rational(-2, 9), Rational(2, 3)}, {Rational(5, 6), Rational(9, 4)}}};
  return pts;
}

}  // namespace

SL2 Sl2Sampler::next() {
  SL2 m{1, 0, 0, 1};
  long len = 4 + static_cast<long>(rng_() % 4);
  for (long i = 0; i < len; ++i) {
    if (rng_() % 2 == 0) {
      m = sl2_mul(m, SL2{0, -1, 1, 0});
    } else {
      long e = static_cast<long>(rng_() % 6) - 3;
      if (e == 0) e = 1;
      m = sl2_mul(m, SL2{1, e, 0, 1});
    }
  }
  return m;
}

SL2 Sl2Sampler::next_gamma2() {
  SL2 m{1, 0, 0, 1};
  long len = 3 + static_cast<long>(rng_() % 3);
  for (long i = 0; i < len; ++i) {
    long e = static_cast<long>(rng_() % 4) - 2;
    if (e == 0) e = 1;
    if (rng_() % 2 == 0)
      m = sl2_mul(m, SL2{1, 2 * e, 0, 1});
    else
      m = sl2_mul(m, SL2{1, 0, -2 * e, 1});
  }
  if (rng_() % 2 == 0) m = sl2_mul(m, SL2{-1, 0, 0, -1});
  return m;
}

std::pair<SL2, SL2> Sl2Sampler::next_congruent_pair() {
  SL2 m = next();
  return {m, sl2_mul(m, next_gamma2())};
}

SuiteResult suite_sympcheck() {
  SuiteResult suite{"sympcheck", {}};

  run_check(suite, "h5-lemma-matrix", [] {
    Mat4 m = mat4_from_rows(
        {{{Rational(0), Rational(0), Rational(2), Rational(1)},
          {Rational(0), Rational(0), Rational(1), Rational(3, 5)},
          {Rational(-3), Rational(5), Rational(0), Rational(0)},
          {Rational(5), Rational(-10), Rational(0), Rational(0)}}});
    require(in_paramodular(m, 5), "H5 lemma matrix not in K(5)");
  });

  run_check(suite, "h8-lemma-matrix", [] {
    Mat4 m = mat4_from_rows(
        {{{Rational(0), Rational(0), Rational(2), Rational(1)},
          {Rational(0), Rational(0), Rational(1), Rational(4, 7)},
          {Rational(-4), Rational(7), Rational(0), Rational(0)},
          {Rational(7), Rational(-14), Rational(0), Rational(0)}}});
    require(in_paramodular(m, 7), "H8 lemma matrix not in K(7)");
  });

  run_check(suite, "translations", [] {
    Sl2Sampler sampler(11);
    for (long n : {5L, 7L})
      for (int i = 0; i < 20; ++i) {
        SL2 w = sampler.next();
        require(in_paramodular(translation(w[0], w[1], w[2], n), n),
                "translation outside K(" + std::to_string(n) + ")");
      }
  });

  run_check(suite, "phi1-membership-homomorphism", [] {
    Sl2Sampler sampler(23);
    for (long n : {5L, 7L})
      for (int i = 0; i < 50; ++i) {
        SL2 a = sampler.next(), b = sampler.next();
        SL2 c = sampler.next(), d = sampler.next();
        require(in_paramodular(phi1_embed(a, b, n), n),
                "phi1 image outside K(" + std::to_string(n) + ")");
        require(phi1_embed(sl2_mul(a, c), sl2_mul(b, d), n) ==
                    mat4_mul(phi1_embed(a, b, n), phi1_embed(c, d, n)),
                "phi1 is not a homomorphism");
      }
  });

  run_check(suite, "phi4-membership-homomorphism", [] {
    Sl2Sampler sampler(37);
    for (long n : {5L, 7L})
      for (int i = 0; i < 60; ++i) {
        auto [a1, a2] = sampler.next_congruent_pair();
        auto [b1, b2] = sampler.next_congruent_pair();
        require(in_paramodular(phi4_embed(a1, a2, n), n),
                "phi4 image outside K(" + std::to_string(n) + ")");
        require(phi4_embed(sl2_mul(a1, b1), sl2_mul(a2, b2), n) ==
                    mat4_mul(phi4_embed(a1, a2, n), phi4_embed(b1, b2, n)),
                "phi4 is not a homomorphism");
      }
  });

  run_check(suite, "phi4-intertwining", [] {
    Sl2Sampler sampler(41);
    const auto& pts = sample_points();
    for (long n : {5L, 7L})
      for (int i = 0; i < 60; ++i) {
        auto [m1, m2] = sampler.next_congruent_pair();
        const auto& [t1, t2] = pts[static_cast<std::size_t>(i) % pts.size()];
        HalfPoint<Rational> lhs =
            moebius_act(phi4_embed(m1, m2, n), p4_point(t1, t2, n));
        HalfPoint<Rational> rhs =
            p4_point(sl2_act(m1, t1), sl2_act(m2, t2), n);
        require(lhs == rhs, "phi4 action does not match the H4 parametrization");
      }
  });

  run_check(suite, "fricke-swap-conjugation", [] {
    for (long n : {5L, 7L}) {
      SL2 u{2, n, 1, (n + 1) / 2};
      Mat4 big_u = conjugation(u);
      require(in_paramodular(big_u, n),
              "swap conjugation outside K(" + std::to_string(n) + ")");
      for (const auto& [t1, t2] : sample_points()) {
        HalfPoint<Rational> lhs =
            moebius_act(big_u, fricke_point(p4_point(t1, t2, n), n));
        require(lhs == p4_point(t2, t1, n),
                "U . V_N does not swap the H4 parameters");
      }
    }
  });

  run_check(suite, "fricke-fixes-h5", [] {
    SL2 u{2, -5, -1, 2};
    require(in_paramodular(conjugation(u), 5), "R_u outside K(5)");
    // The composition with the Fricke point map fixes H5 pointwise when
    // the conjugation acts by the inverse of u (the opposite action
    // convention); -u^{-1} = (2, 5; 1, 2).
    Mat4 fix = conjugation(SL2{2, 5, 1, 2});
    require(in_paramodular(fix, 5), "inverse conjugation outside K(5)");
    auto qr = [](const Rational& r) { return QuadRational(r); };
    const auto& pts = sample_points();
    for (const auto& [t1, t2] : pts) {
      Complex<QuadRational> s1{qr(t1.re), qr(t1.im)};
      Complex<QuadRational> s2{qr(t2.re), qr(t2.im)};
      HalfPoint<QuadRational> p = p5_point(s1, s2);
      require(moebius_act(fix, fricke_point(p, 5)) == p,
              "R_u . V_5 does not fix the H5 point");
    }
  });

  run_check(suite, "moebius-action-law", [] {
    Sl2Sampler sampler(53);
    const auto& pts = sample_points();
    for (int i = 0; i < 20; ++i) {
      SL2 a = sampler.next(), b = sampler.next();
      Mat4 m1 = mat4_mul(phi1_embed(a, b, 5), translation(1, 0, 2, 5));
      SL2 c = sampler.next(), d = sampler.next();
      Mat4 m2 = mat4_mul(translation(0, 1, -1, 5), phi1_embed(c, d, 5));
      const auto& [t1, t2] = pts[static_cast<std::size_t>(i) % pts.size()];
      HalfPoint<Rational> p = p4_point(t1, t2, 5);
      require(moebius_act(mat4_mul(m1, m2), p) ==
                  moebius_act(m1, moebius_act(m2, p)),
              "Moebius action is not compatible with multiplication");
    }
  });

  return suite;
}

// ------------------------------------------------------------------ hilbert

namespace {

std::vector<LabeledSeries<BiExp>> mg_generators(const Rational& t) {
  return {{"X2", 2, X2(t).expansion},
          {"X4", 4, X4(t).expansion},
          {"Delta6", 6, Delta6(t).expansion},
          {"X8", 8, X8(t).expansion}};
}

std::vector<LabeledSeries<BiExp>> a_star_labeled(const Rational& t,
                                                 std::size_t count) {
  std::vector<LabeledSeries<BiExp>> out;
  const long weights[] = {4, 6, 6, 8, 10, 12, 14, 16};
  auto gens = a_star_generators(t);
  for (std::size_t i = 0; i < count; ++i)
    out.push_back({gens[i].first, weights[i], gens[i].second.expansion});
  return out;
}

IntPoly theorem1_numerator() {
  IntPoly p(31, Integer(0));
  p[0] = 1;
  p[6] = 1;
  p[7] = 1;
  p[8] = 2;
  p[9] = 1;
  p[10] = 2;
  p[11] = 1;
  p[12] = 2;
  p[14] = 2;
  p[16] = 2;
  p[18] = 2;
  p[19] = 1;
  p[20] = 2;
  p[21] = 1;
  p[22] = 2;
  p[23] = 1;
  p[24] = 1;
  p[30] = 1;
  return p;
}

IntPoly theorem2_numerator() {
  IntPoly p(30, Integer(0));
  p[0] = 1;
  p[5] = 1;
  for (int i = 6; i <= 23; ++i) p[i] = 2;
  p[24] = 1;
  p[29] = 1;
  return p;
}

}  // namespace

SuiteResult suite_hilbert() {
  SuiteResult suite{"hilbert", {}};

  run_check(suite, "level5-stanley-criteria", [] {
    IntPoly p = theorem1_numerator();
    require(palindrome_test(p), "level-5 numerator is not palindromic");
    require(!cyclotomic_product_test(p),
            "level-5 numerator factors into cyclotomics");
  });

  run_check(suite, "level7-stanley-criteria", [] {
    IntPoly p = theorem2_numerator();
    require(palindrome_test(p), "level-7 numerator is not palindromic");
    require(!cyclotomic_product_test(p),
            "level-7 numerator factors into cyclotomics");
  });

  run_check(suite, "a-star-sym-hilbert-series", [] {
    auto gens = a_star_labeled(Rational(8), 5);
    HilbertSeries h{{Integer(1), 0, 0, 0, 0, 0, 0, 0, Integer(1), 0, Integer(1)},
                    {4, 6, 6}};
    auto dims = hilbert_expand(h, 20);
    for (long k = 0; k <= 20; k += 2)
      require(Integer(dimension_by_rank(gens, k)) ==
                  dims[static_cast<std::size_t>(k)],
              "symmetric subring dimension mismatch at weight " +
                  std::to_string(k));
  });

  run_check(suite, "a-star-hilbert-series", [] {
    auto gens = a_star_labeled(Rational(8), 8);
    HilbertSeries h{{Integer(1), 0, Integer(-1), 0, 0, 0, Integer(1), 0, 0, 0,
                     0, 0, Integer(1)},
                    {2, 4, 6}};
    auto dims = hilbert_expand(h, 20);
    for (long k = 0; k <= 20; k += 2)
      require(Integer(dimension_by_rank(gens, k)) ==
                  dims[static_cast<std::size_t>(k)],
              "A_* dimension mismatch at weight " + std::to_string(k));
  });

  run_check(suite, "mg-hironaka-audit", [] {
    auto gens = mg_generators(Rational(8));
    for (long k = 0; k <= 20; k += 2)
      require(dimension_by_rank(gens, k) ==
                  hironaka_predicted({2, 4, 6}, {8}, k),
              "M_*(G) dimension mismatch at weight " + std::to_string(k));
  });

  run_check(suite, "mg-relation-at-16", [] {
    auto gens = mg_generators(Rational(8));
    for (long k = 2; k < 16; k += 2)
      require(relations_in_weight(gens, k).kernel.empty(),
              "unexpected relation at weight " + std::to_string(k));
    Relation rel = relations_in_weight(gens, 16);
    require(rel.kernel.size() == 1, "expected exactly one relation at 16");
    // The quadratic relation satisfied by X8, as coefficients over the
    // monomial list in (X2, X4, Delta6, X8) exponents.
    std::map<std::vector<long>, Rational> expected = {
        {{0, 0, 0, 2}, Rational(1)},    {{4, 2, 0, 0}, Rational(-1)},
        {{2, 3, 0, 0}, Rational(128)},  {{0, 4, 0, 0}, Rational(-4096)},
        {{3, 1, 1, 0}, Rational(-4)},   {{1, 2, 1, 0}, Rational(2304)},
        {{0, 1, 2, 0}, Rational(6912)}};
    RatVec target(rel.monomials.size(), Rational(0));
    for (std::size_t i = 0; i < rel.monomials.size(); ++i)
      if (auto it = expected.find(rel.monomials[i]); it != expected.end())
        target[i] = it->second;
    // Proportionality: cross-multiply against the found kernel vector.
    const RatVec& found = rel.kernel.front();
    Rational s1(0), s2(0);
    for (std::size_t i = 0; i < target.size(); ++i) {
      if (s1 == 0 && target[i] != 0 && found[i] != 0) {
        s1 = target[i];
        s2 = found[i];
      }
    }
    require(s2 != 0, "kernel vector shares no support with the relation");
    for (std::size_t i = 0; i < target.size(); ++i)
      require(target[i] * s2 == found[i] * s1,
              "relation at 16 is not proportional to the known one");
  });

  return suite;
}

// --------------------------------------------------------------- dispatcher

std::vector<SuiteResult> run_suites(const std::string& name,
                                    const std::string& data_dir) {
  std::vector<SuiteResult> out;
  bool all = name == "all";
  if (all || name == "classical") out.push_back(suite_classical());
  if (all || name == "deghilb") out.push_back(suite_deghilb());
  if (all || name == "paramod") out.push_back(suite_paramod(data_dir));
  if (all || name == "sympcheck") out.push_back(suite_sympcheck());
  if (all || name == "hilbert") out.push_back(suite_hilbert());
  if (out.empty()) throw std::invalid_argument("unknown suite: " + name);
  return out;
}

int suites_exit_code(const std::vector<SuiteResult>& results) {
  for (const auto& s : results)
    if (!s.all_pass()) return 1;
  return 0;
}

}  // namespace pmf
