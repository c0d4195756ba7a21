#pragma once

#include "pmf/rational.hpp"

namespace pmf {

/// Element a + b*sqrt(D) of a real-quadratic field, D a fixed positive
/// squarefree integer carried as data. Mixing discriminants is an error;
/// purely rational values (b = 0) interoperate with any discriminant.
class QuadRational {
 public:
  QuadRational() : a_(0), b_(0), disc_(0) {}
  QuadRational(Rational a, Rational b, long disc);
  /// Rational embedding; compatible with every discriminant.
  explicit QuadRational(Rational a) : a_(std::move(a)), b_(0), disc_(0) {}

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  /// 0 when the value is rational and carries no discriminant.
  long disc() const { return disc_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Galois conjugate a - b*sqrt(D).
  QuadRational conjugate() const;
  /// Exact sign of a + b*sqrt(D): -1, 0 or +1, by sign analysis and squaring.
  int sign() const;
  bool is_positive() const { return sign() > 0; }

  /// a + a' = 2a.
  Rational trace() const { return a_ + a_; }
  /// a^2 - b^2 D.
  Rational norm() const;

  QuadRational operator-() const;
  QuadRational inverse() const;

  friend QuadRational operator+(const QuadRational& x, const QuadRational& y);
  friend QuadRational operator-(const QuadRational& x, const QuadRational& y);
  friend QuadRational operator*(const QuadRational& x, const QuadRational& y);
  friend QuadRational operator/(const QuadRational& x, const QuadRational& y);
  friend bool operator==(const QuadRational& x, const QuadRational& y);
  friend bool operator!=(const QuadRational& x, const QuadRational& y) {
    return !(x == y);
  }
  /// Total order induced by the real embedding sqrt(D) > 0.
  friend bool operator<(const QuadRational& x, const QuadRational& y);

  /// "p/q+r/s*sqrt(D)", "p/q-r/s*sqrt(D)", or plain "p/q" when rational.
  std::string str() const;
  static QuadRational parse(const std::string& text, long disc);

 private:
  static long merge_disc(const QuadRational& x, const QuadRational& y);
  Rational a_, b_;
  long disc_;
};

/// Complex number over an exact scalar field F (Rational or QuadRational).
template <class F>
struct Complex {
  F re{};
  F im{};

  Complex() = default;
  Complex(F r, F i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(F r) : re(std::move(r)), im{} {}

  bool is_zero() const { return re == F{} && im == F{}; }

  friend Complex operator+(const Complex& x, const Complex& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend Complex operator-(const Complex& x, const Complex& y) {
    return {x.re - y.re, x.im - y.im};
  }
  Complex operator-() const { return {F{} - re, F{} - im}; }
  friend Complex operator*(const Complex& x, const Complex& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  friend Complex operator/(const Complex& x, const Complex& y) {
    if (y.is_zero()) throw std::domain_error("division by complex zero");
    F n = y.re * y.re + y.im * y.im;
    return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
  }
  friend bool operator==(const Complex& x, const Complex& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const Complex& x, const Complex& y) { return !(x == y); }
};

using ComplexRational = Complex<Rational>;
using ComplexQuad = Complex<QuadRational>;

}  // namespace pmf
