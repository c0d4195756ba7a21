#include "pmf/sympcheck.hpp"

namespace pmf {

namespace {

const Mat4& symplectic_j() {
  static const Mat4 j = {{{Rational(0), Rational(0), Rational(1), Rational(0)},
                          {Rational(0), Rational(0), Rational(0), Rational(1)},
                          {Rational(-1), Rational(0), Rational(0), Rational(0)},
                          {Rational(0), Rational(-1), Rational(0), Rational(0)}}};
  return j;
}

Mat4 mat4_transpose(const Mat4& m) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = m[j][i];
  return out;
}

}  // namespace

Mat4 mat4_identity() {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i][j] = Rational(i == j ? 1 : 0);
  return out;
}

Mat4 mat4_mul(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational acc(0);
      for (int k = 0; k < 4; ++k) acc += x[i][k] * y[k][j];
      out[i][j] = acc;
    }
  return out;
}

bool operator==(const Mat4& x, const Mat4& y) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (x[i][j] != y[i][j]) return false;
  return true;
}

bool is_symplectic(const Mat4& m) {
  return mat4_mul(mat4_mul(mat4_transpose(m), symplectic_j()), m) == symplectic_j();
}

bool in_paramodular(const Mat4& m, long level) {
  if (!is_symplectic(m)) return false;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Rational v = m[i][j];
      if (j == 3) v *= level;
      if (i == 3) v /= level;
      if (!is_integer(v)) return false;
    }
  return true;
}

long sl2_det(const SL2& m) { return m[0] * m[3] - m[1] * m[2]; }

SL2 sl2_mul(const SL2& x, const SL2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
          x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}

Mat4 phi1_embed(const SL2& m1, const SL2& m2, long level) {
  if (sl2_det(m1) != 1 || sl2_det(m2) != 1)
    throw std::invalid_argument("phi1_embed needs determinant one");
  auto [a1, b1, c1, d1] = m1;
  auto [a2, b2, c2, d2] = m2;
  Mat4 out = {{{Rational(a1), Rational(0), Rational(b1), Rational(0)},
               {Rational(0), Rational(a2), Rational(0), rational(b2, level)},
               {Rational(c1), Rational(0), Rational(d1), Rational(0)},
               {Rational(0), Rational(level * c2), Rational(0), Rational(d2)}}};
  return out;
}

Mat4 phi4_embed(const SL2& m1, const SL2& m2, long level) {
  if (sl2_det(m1) != 1 || sl2_det(m2) != 1)
    throw std::invalid_argument("phi4_embed needs determinant one");
  for (int i = 0; i < 4; ++i)
    if ((m1[i] - m2[i]) % 2 != 0)
      throw std::invalid_argument("phi4_embed needs a mod-2 congruent pair");
  auto [a1, b1, c1, d1] = m1;
  auto [a2, b2, c2, d2] = m2;
  long n = level;
  Mat4 out = {{{Rational(a1), Rational(0), Rational(2 * b1), Rational(b1)},
               {rational(a1 - a2, 2), Rational(a2), Rational(b1),
                rational(b2 + n * b1, 2 * n)},
               {rational(c1 + n * c2, 2), Rational(-n * c2), Rational(d1),
                rational(d1 - d2, 2)},
               {Rational(-n * c2), Rational(2 * n * c2), Rational(0),
                Rational(d2)}}};
  return out;
}

Mat4 translation(long b1, long b2, long b3, long level) {
  Mat4 out = mat4_identity();
  out[0][2] = Rational(b1);
  out[0][3] = Rational(b2);
  out[1][2] = Rational(b2);
  out[1][3] = rational(b3, level);
  return out;
}

Mat4 conjugation(const SL2& u) {
  long det = sl2_det(u);
  if (det != 1 && det != -1)
    throw std::invalid_argument("conjugation needs determinant +-1");
  // (u^{-1})^T = (d, -c; -b, a) / det
  Mat4 out = {{{Rational(u[0]), Rational(u[1]), Rational(0), Rational(0)},
               {Rational(u[2]), Rational(u[3]), Rational(0), Rational(0)},
               {Rational(0), Rational(0), rational(u[3], det), rational(-u[2], det)},
               {Rational(0), Rational(0), rational(-u[1], det), rational(u[0], det)}}};
  return out;
}

HalfPoint<QuadRational> p5_point(const Complex<QuadRational>& t1,
                                 const Complex<QuadRational>& t2) {
  QuadRational lambda(Rational(1, 2), Rational(-1, 10), 5);
  QuadRational lambda_c = lambda.conjugate();
  Complex<QuadRational> l{lambda, QuadRational()};
  Complex<QuadRational> lc{lambda_c, QuadRational()};
  HalfPoint<QuadRational> out;
  out.tau = t1 + t2;
  out.z = l * t1 + lc * t2;
  out.w = l * l * t1 + lc * lc * t2;
  return out;
}

}  // namespace pmf
