#include "pmf/qexp.hpp"

#include <numeric>

namespace pmf {

namespace {
long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }
}  // namespace

QExp::QExp(long grain, Rational trunc) : grain_(grain), trunc_(std::move(trunc)) {
  if (grain_ < 1) throw std::invalid_argument("grain must be positive");
}

void QExp::check_grid(const Rational& e) const {
  Rational scaled = e * grain_;
  if (!is_integer(scaled))
    throw std::invalid_argument("exponent " + to_string(e) +
                                " off the 1/" + std::to_string(grain_) + " grid");
}

const Rational& QExp::min_exponent() const {
  if (terms_.empty()) throw std::domain_error("min_exponent of zero series");
  return terms_.begin()->first;
}

void QExp::set(const Rational& exponent, const Rational& coeff) {
  check_grid(exponent);
  if (exponent >= trunc_)
    throw std::invalid_argument("exponent at or beyond truncation");
  if (coeff == 0)
    terms_.erase(exponent);
  else
    terms_[exponent] = coeff;
}

Rational QExp::coeff(const Rational& exponent) const {
  if (exponent >= trunc_)
    throw TruncationError("coefficient query at exponent " + to_string(exponent) +
                          " >= truncation " + to_string(trunc_));
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Rational> QExp::window_exponents(const Rational& from) const {
  std::vector<Rational> out;
  Rational step(1, grain_);
  step.canonicalize();
  for (Rational e = from; e < trunc_; e += step) out.push_back(e);
  return out;
}

QExp QExp::with_trunc(const Rational& t) const {
  if (t > trunc_)
    throw std::invalid_argument("cannot extend truncation without data");
  QExp out(grain_, t);
  for (const auto& [e, c] : terms_)
    if (e < t) out.terms_.emplace(e, c);
  return out;
}

QExp operator+(const QExp& x, const QExp& y) {
  QExp out(lcm_long(x.grain_, y.grain_), std::min(x.trunc_, y.trunc_));
  for (const auto& [e, c] : x.terms_)
    if (e < out.trunc_) out.terms_[e] = c;
  for (const auto& [e, c] : y.terms_) {
    if (e >= out.trunc_) continue;
    auto [it, fresh] = out.terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

QExp QExp::operator-() const {
  QExp out(grain_, trunc_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

QExp operator-(const QExp& x, const QExp& y) { return x + (-y); }

QExp operator*(const Rational& c, const QExp& x) {
  QExp out(x.grain_, x.trunc_);
  if (c == 0) return out;
  for (const auto& [e, v] : x.terms_) out.terms_.emplace(e, c * v);
  return out;
}

QExp operator*(const QExp& x, const QExp& y) {
  // Window: coefficient at e is exact iff every split e = e1 + e2 with a
  // stored term on one side lands below the other factor's truncation.
  Rational tx = y.terms_.empty() ? x.trunc_ : x.trunc_ + y.min_exponent();
  Rational ty = x.terms_.empty() ? y.trunc_ : y.trunc_ + x.min_exponent();
  QExp out(lcm_long(x.grain_, y.grain_), std::min(tx, ty));
  for (const auto& [e1, c1] : x.terms_)
    for (const auto& [e2, c2] : y.terms_) {
      Rational e = e1 + e2;
      if (e >= out.trunc_) continue;
      auto [it, fresh] = out.terms_.emplace(e, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  return out;
}

bool operator==(const QExp& x, const QExp& y) {
  return x.grain_ == y.grain_ && x.trunc_ == y.trunc_ && x.terms_ == y.terms_;
}

QExp QExp::pow(unsigned long n) const {
  QExp acc(grain_, trunc_);
  acc.set(Rational(0), Rational(1));
  QExp base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

bool QExp::agree(const QExp& x, const QExp& y) {
  Rational t = std::min(x.trunc_, y.trunc_);
  for (const auto& [e, c] : x.terms_)
    if (e < t && y.coeff(e) != c) return false;
  for (const auto& [e, c] : y.terms_)
    if (e < t && x.coeff(e) != c) return false;
  return true;
}

QExp divide(const QExp& num, const QExp& den) {
  if (den.is_zero()) throw std::domain_error("division by zero-to-truncation series");
  const Rational& e0 = den.min_exponent();
  Rational c0 = den.terms().begin()->second;
  Rational t = std::min(num.trunc(), den.trunc()) - e0;
  long g = std::lcm(num.grain(), den.grain());
  QExp out(g, t);
  // Eliminate from the minimal exponent upward: r accumulates num - out*den.
  std::map<Rational, Rational> rem;
  for (const auto& [e, c] : num.terms()) rem[e] = c;
  while (!rem.empty()) {
    auto lead = rem.begin();
    Rational e = lead->first - e0;
    if (e >= t) break;
    Rational q = lead->second / c0;
    out.set(e, q);
    for (const auto& [de, dc] : den.terms()) {
      Rational re = e + de;
      auto [it, fresh] = rem.emplace(re, -q * dc);
      if (!fresh) it->second -= q * dc;
      if (it->second == 0) rem.erase(it);
    }
  }
  return out;
}

QExp substitute_scale_up(const QExp& x, long m) {
  if (m < 1) throw std::invalid_argument("scale factor must be positive");
  long g = x.grain() % m == 0 ? x.grain() / m : x.grain();
  QExp out(g, x.trunc() * m);
  for (const auto& [e, c] : x.terms()) out.set(e * m, c);
  return out;
}

QExp substitute_scale_down(const QExp& x, long m) {
  if (m < 1) throw std::invalid_argument("scale factor must be positive");
  Rational t = x.trunc() / m;
  QExp out(x.grain() * m, t);
  for (const auto& [e, c] : x.terms()) out.set(e / m, c);
  return out;
}

QExp phase_twist_T(const QExp& x) {
  if (x.grain() > 2)
    throw std::invalid_argument("phase twist requires exponent grain dividing 2");
  QExp out(x.grain(), x.trunc());
  for (const auto& [e, c] : x.terms()) {
    Rational doubled = e * 2;  // integral by the grain precondition
    bool odd = mpz_odd_p(Rational(doubled).get_num_mpz_t()) != 0;
    out.set(e, odd ? -c : c);
  }
  return out;
}

}  // namespace pmf
