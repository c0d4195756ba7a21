#include "pmf/quadpair.hpp"

namespace pmf {

QuadPairExp::QuadPairExp(long disc, Rational trunc)
    : disc_(disc), trunc_(std::move(trunc)) {
  if (disc_ <= 1) throw std::invalid_argument("discriminant must exceed 1");
}

void QuadPairExp::check_exponent(const QuadRational& e) const {
  if (e.disc() != 0 && e.disc() != disc_)
    throw std::invalid_argument("exponent discriminant mismatch");
  if (e.sign() < 0 || e.conjugate().sign() < 0)
    throw std::invalid_argument("exponent " + e.str() + " not totally nonnegative");
}

void QuadPairExp::set(const QuadRational& exponent, const Rational& coeff) {
  check_exponent(exponent);
  if (exponent.trace() >= trunc_)
    throw std::invalid_argument("exponent trace at or beyond truncation");
  if (coeff == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = coeff;
}

Rational QuadPairExp::coeff(const QuadRational& exponent) const {
  if (exponent.trace() >= trunc_)
    throw TruncationError("coefficient query at trace " +
                          to_string(exponent.trace()) + " >= truncation " +
                          to_string(trunc_));
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

QuadPairExp QuadPairExp::with_trunc(const Rational& t) const {
  if (t > trunc_)
    throw std::invalid_argument("cannot extend truncation without data");
  QuadPairExp out(disc_, t);
  for (const auto& [e, c] : terms_)
    if (e.trace() < t) out.terms_.emplace(e, c);
  return out;
}

QuadPairExp operator+(const QuadPairExp& x, const QuadPairExp& y) {
  if (x.disc_ != y.disc_) throw std::invalid_argument("mixed discriminants");
  QuadPairExp out(x.disc_, std::min(x.trunc_, y.trunc_));
  for (const auto& [e, c] : x.terms_)
    if (e.trace() < out.trunc_) out.terms_[e] = c;
  for (const auto& [e, c] : y.terms_) {
    if (e.trace() >= out.trunc_) continue;
    auto [it, fresh] = out.terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

QuadPairExp QuadPairExp::operator-() const {
  QuadPairExp out(disc_, trunc_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QuadPairExp operator-(const QuadPairExp& x, const QuadPairExp& y) {
  return x + (-y);
}

QuadPairExp operator*(const Rational& c, const QuadPairExp& x) {
  QuadPairExp out(x.disc_, x.trunc_);
  if (c == 0) return out;
  for (const auto& [e, v] : x.terms_) out.terms_.emplace(e, c * v);
  return out;
}

QuadPairExp operator*(const QuadPairExp& x, const QuadPairExp& y) {
  if (x.disc_ != y.disc_) throw std::invalid_argument("mixed discriminants");
  // Trace is additive and nonnegative on the support, so the window rule is
  // the one-variable one with trace in place of the exponent.
  auto min_trace = [](const std::map<QuadRational, Rational>& t) {
    Rational m(0);
    bool seen = false;
    for (const auto& [e, c] : t) {
      Rational tr = e.trace();
      if (!seen || tr < m) m = tr, seen = true;
    }
    return m;
  };
  Rational t;
  if (x.terms_.empty() || y.terms_.empty())
    t = std::min(x.trunc_, y.trunc_);
  else
    t = std::min(x.trunc_ + min_trace(y.terms_), y.trunc_ + min_trace(x.terms_));
  QuadPairExp out(x.disc_, t);
  for (const auto& [e1, c1] : x.terms_)
    for (const auto& [e2, c2] : y.terms_) {
      QuadRational e = e1 + e2;
      if (e.trace() >= t) continue;
      auto [it, fresh] = out.terms_.emplace(e, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  return out;
}

bool operator==(const QuadPairExp& x, const QuadPairExp& y) {
  return x.disc_ == y.disc_ && x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
}

bool QuadPairExp::agree(const QuadPairExp& x, const QuadPairExp& y) {
  Rational t = std::min(x.trunc_, y.trunc_);
  for (const auto& [e, c] : x.terms_)
    if (e.trace() < t && y.coeff(e) != c) return false;
  for (const auto& [e, c] : y.terms_)
    if (e.trace() < t && x.coeff(e) != c) return false;
  return true;
}

}  // namespace pmf
