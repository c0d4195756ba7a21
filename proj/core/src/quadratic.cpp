#include "pmf/quadratic.hpp"

#include <sstream>

namespace pmf {

QuadRational::QuadRational(Rational a, Rational b, long disc)
    : a_(std::move(a)), b_(std::move(b)), disc_(disc) {
  if (b_ == 0) {
    disc_ = 0;
  } else if (disc_ <= 1) {
    throw std::invalid_argument("QuadRational discriminant must exceed 1");
  }
}

long QuadRational::merge_disc(const QuadRational& x, const QuadRational& y) {
  if (x.disc_ == 0) return y.disc_;
  if (y.disc_ == 0 || x.disc_ == y.disc_) return x.disc_;
  throw std::invalid_argument("mixed quadratic discriminants");
}

QuadRational QuadRational::conjugate() const {
  QuadRational out = *this;
  out.b_ = -out.b_;
  if (out.b_ == 0) out.disc_ = 0;
  return out;
}

int QuadRational::sign() const {
  int sa = sgn(a_);
  int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 D exactly.
  Rational a2 = a_ * a_;
  Rational b2d = b_ * b_ * disc_;
  int c = cmp(a2, b2d);
  if (c == 0) return 0;  // impossible for squarefree D > 1, kept for safety
  return c > 0 ? sa : sb;
}

Rational QuadRational::norm() const { return a_ * a_ - b_ * b_ * disc_; }

QuadRational QuadRational::operator-() const {
  QuadRational out = *this;
  out.a_ = -out.a_;
  out.b_ = -out.b_;
  return out;
}

QuadRational QuadRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  Rational n = norm();
  QuadRational out = conjugate();
  out.a_ /= n;
  out.b_ /= n;
  return out;
}

QuadRational operator+(const QuadRational& x, const QuadRational& y) {
  long d = QuadRational::merge_disc(x, y);
  QuadRational out;
  out.a_ = x.a_ + y.a_;
  out.b_ = x.b_ + y.b_;
  out.disc_ = out.b_ == 0 ? 0 : d;
  return out;
}

QuadRational operator-(const QuadRational& x, const QuadRational& y) {
  return x + (-y);
}

QuadRational operator*(const QuadRational& x, const QuadRational& y) {
  long d = QuadRational::merge_disc(x, y);
  QuadRational out;
  out.a_ = x.a_ * y.a_ + x.b_ * y.b_ * d;
  out.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  out.disc_ = out.b_ == 0 ? 0 : d;
  return out;
}

QuadRational operator/(const QuadRational& x, const QuadRational& y) {
  return x * y.inverse();
}

bool operator==(const QuadRational& x, const QuadRational& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_) return false;
  return x.b_ == 0 || x.disc_ == y.disc_;
}

bool operator<(const QuadRational& x, const QuadRational& y) {
  return (x - y).sign() < 0;
}

std::string QuadRational::str() const {
  if (b_ == 0) return to_string(a_);
  std::ostringstream os;
  os << to_string(a_);
  Rational b = b_;
  if (b < 0) {
    os << '-';
    b = -b;
  } else {
    os << '+';
  }
  os << to_string(b) << "*sqrt(" << disc_ << ")";
  return os.str();
}

QuadRational QuadRational::parse(const std::string& text, long disc) {
  auto star = text.find("*sqrt(");
  if (star == std::string::npos)
    return QuadRational(parse_rational(text));
  // Split off the surd coefficient: scan back to the sign separating the parts.
  std::size_t split = std::string::npos;
  for (std::size_t i = star; i-- > 1;) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/') {
      split = i;
      break;
    }
  }
  if (split == std::string::npos)
    throw DataError("malformed quadratic literal: '" + text + "'");
  Rational a = parse_rational(text.substr(0, split));
  Rational b = parse_rational(text.substr(split + 1, star - split - 1));
  if (text[split] == '-') b = -b;
  auto close = text.find(')', star);
  if (close == std::string::npos)
    throw DataError("malformed quadratic literal: '" + text + "'");
  long d = std::stol(text.substr(star + 6, close - star - 6));
  if (d != disc) throw DataError("unexpected discriminant in '" + text + "'");
  return QuadRational(a, b, d);
}

}  // namespace pmf
