#include "pmf/biexp.hpp"

#include <numeric>

namespace pmf {

BiExp::BiExp(long grain1, long grain2, Rational trunc1, Rational trunc2)
    : grain1_(grain1),
      grain2_(grain2),
      trunc1_(std::move(trunc1)),
      trunc2_(std::move(trunc2)) {
  if (grain1_ < 1 || grain2_ < 1)
    throw std::invalid_argument("grain must be positive");
}

void BiExp::check_grid(const Rational& e, long grain) {
  Rational scaled = e * grain;
  if (!is_integer(scaled))
    throw std::invalid_argument("exponent " + to_string(e) + " off the 1/" +
                                std::to_string(grain) + " grid");
}

void BiExp::set(const Rational& e1, const Rational& e2, const Rational& coeff) {
  check_grid(e1, grain1_);
  check_grid(e2, grain2_);
  if (e1 >= trunc1_ || e2 >= trunc2_)
    throw std::invalid_argument("exponent pair at or beyond truncation");
  BiKey key{e1, e2};
  if (coeff == 0)
    terms_.erase(key);
  else
    terms_[key] = coeff;
}

Rational BiExp::coeff(const Rational& e1, const Rational& e2) const {
  if (e1 >= trunc1_ || e2 >= trunc2_)
    throw TruncationError("coefficient query at (" + to_string(e1) + "," +
                          to_string(e2) + ") outside trusted window");
  auto it = terms_.find(BiKey{e1, e2});
  return it == terms_.end() ? Rational(0) : it->second;
}

BiExp BiExp::with_trunc(const Rational& t1, const Rational& t2) const {
  if (t1 > trunc1_ || t2 > trunc2_)
    throw std::invalid_argument("cannot extend truncation without data");
  BiExp out(grain1_, grain2_, t1, t2);
  for (const auto& [k, c] : terms_)
    if (k.e1 < t1 && k.e2 < t2) out.terms_.emplace(k, c);
  return out;
}

BiExp BiExp::swap() const {
  BiExp out(grain2_, grain1_, trunc2_, trunc1_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(BiKey{k.e2, k.e1}, c);
  return out;
}

BiExp operator+(const BiExp& x, const BiExp& y) {
  BiExp out(std::lcm(x.grain1_, y.grain1_), std::lcm(x.grain2_, y.grain2_),
            std::min(x.trunc1_, y.trunc1_), std::min(x.trunc2_, y.trunc2_));
  for (const auto& [k, c] : x.terms_)
    if (k.e1 < out.trunc1_ && k.e2 < out.trunc2_) out.terms_[k] = c;
  for (const auto& [k, c] : y.terms_) {
    if (k.e1 >= out.trunc1_ || k.e2 >= out.trunc2_) continue;
    auto [it, fresh] = out.terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

BiExp BiExp::operator-() const {
  BiExp out(grain1_, grain2_, trunc1_, trunc2_);
  for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
  return out;
}

BiExp operator-(const BiExp& x, const BiExp& y) { return x + (-y); }

BiExp operator*(const Rational& c, const BiExp& x) {
  BiExp out(x.grain1_, x.grain2_, x.trunc1_, x.trunc2_);
  if (c == 0) return out;
  for (const auto& [k, v] : x.terms_) out.terms_.emplace(k, c * v);
  return out;
}

BiExp operator*(const BiExp& x, const BiExp& y) {
  // Per-variable window as in the one-variable case, assuming nonnegative
  // exponents (asserted below): T_i = min(Tx_i + min_y_i, Ty_i + min_x_i).
  auto min_of = [](const std::map<BiKey, Rational>& t, bool first) {
    Rational m;
    bool seen = false;
    for (const auto& [k, c] : t) {
      const Rational& e = first ? k.e1 : k.e2;
      if (!seen || e < m) m = e, seen = true;
    }
    if (!seen || m < 0)
      throw std::invalid_argument("BiExp multiplication requires nonnegative exponents");
    return m;
  };
  Rational t1 = x.trunc1_, t2 = x.trunc2_;
  if (!x.terms_.empty() && !y.terms_.empty()) {
    t1 = std::min(x.trunc1_ + min_of(y.terms_, true),
                  y.trunc1_ + min_of(x.terms_, true));
    t2 = std::min(x.trunc2_ + min_of(y.terms_, false),
                  y.trunc2_ + min_of(x.terms_, false));
  } else {
    t1 = std::min(x.trunc1_, y.trunc1_);
    t2 = std::min(x.trunc2_, y.trunc2_);
  }
  BiExp out(std::lcm(x.grain1_, y.grain1_), std::lcm(x.grain2_, y.grain2_), t1, t2);
  for (const auto& [k1, c1] : x.terms_)
    for (const auto& [k2, c2] : y.terms_) {
      BiKey k{k1.e1 + k2.e1, k1.e2 + k2.e2};
      if (k.e1 >= t1 || k.e2 >= t2) continue;
      auto [it, fresh] = out.terms_.emplace(k, c1 * c2);
      if (!fresh) it->second += c1 * c2;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  return out;
}

bool operator==(const BiExp& x, const BiExp& y) {
  return x.grain1_ == y.grain1_ && x.grain2_ == y.grain2_ &&
         x.trunc1_ == y.trunc1_ && x.trunc2_ == y.trunc2_ &&
         x.terms_ == y.terms_;
}

BiExp BiExp::pow(unsigned long n) const {
  BiExp acc(grain1_, grain2_, trunc1_, trunc2_);
  acc.set(Rational(0), Rational(0), Rational(1));
  BiExp base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return acc;
}

bool BiExp::agree(const BiExp& x, const BiExp& y) {
  Rational t1 = std::min(x.trunc1_, y.trunc1_);
  Rational t2 = std::min(x.trunc2_, y.trunc2_);
  for (const auto& [k, c] : x.terms_)
    if (k.e1 < t1 && k.e2 < t2 && y.coeff(k.e1, k.e2) != c) return false;
  for (const auto& [k, c] : y.terms_)
    if (k.e1 < t1 && k.e2 < t2 && x.coeff(k.e1, k.e2) != c) return false;
  return true;
}

BiExp tensor(const QExp& x, const QExp& y) {
  BiExp out(x.grain(), y.grain(), x.trunc(), y.trunc());
  for (const auto& [e1, c1] : x.terms())
    for (const auto& [e2, c2] : y.terms()) out.set(e1, e2, c1 * c2);
  return out;
}

QExp boundary_slice(const BiExp& x, int which) {
  if (which != 1 && which != 2) throw std::invalid_argument("slice index must be 1 or 2");
  QExp out(which == 1 ? x.grain2() : x.grain1(),
           which == 1 ? x.trunc2() : x.trunc1());
  for (const auto& [k, c] : x.terms()) {
    const Rational& fixed = which == 1 ? k.e1 : k.e2;
    if (fixed == 0) out.set(which == 1 ? k.e2 : k.e1, c);
  }
  return out;
}

QExp diagonal(const BiExp& x) {
  long g = std::lcm(x.grain1(), x.grain2());
  QExp out(g, std::min(x.trunc1(), x.trunc2()));
  std::map<Rational, Rational> acc;
  for (const auto& [k, c] : x.terms()) {
    if (k.e1 < 0 || k.e2 < 0)
      throw std::invalid_argument("diagonal requires nonnegative exponents");
    acc[k.e1 + k.e2] += c;
  }
  for (const auto& [e, c] : acc)
    if (c != 0 && e < out.trunc()) out.set(e, c);
  return out;
}

BiExp divide(const BiExp& num, const BiExp& den) {
  if (den.is_zero()) throw std::domain_error("division by zero-to-truncation series");
  auto lead_it = den.terms().begin();
  const BiKey e0 = lead_it->first;
  auto next = std::next(lead_it);
  if (next != den.terms().end()) {
    Rational d0 = e0.e1 + e0.e2, d1 = next->first.e1 + next->first.e2;
    if (d0 == d1 && e0.e1 == next->first.e1)
      throw std::domain_error("no unique minimal term in divisor");
  }
  Rational c0 = lead_it->second;
  Rational t1 = std::min(num.trunc1(), den.trunc1()) - e0.e1;
  Rational t2 = std::min(num.trunc2(), den.trunc2()) - e0.e2;
  BiExp out(std::lcm(num.grain1(), den.grain1()),
            std::lcm(num.grain2(), den.grain2()), t1, t2);
  std::map<BiKey, Rational> rem;
  for (const auto& [k, c] : num.terms()) rem[k] = c;
  while (!rem.empty()) {
    auto lead = rem.begin();
    BiKey e{lead->first.e1 - e0.e1, lead->first.e2 - e0.e2};
    if (e.e1 >= t1 || e.e2 >= t2 || e.e1 < 0 || e.e2 < 0) {
      rem.erase(lead);
      continue;
    }
    Rational q = lead->second / c0;
    out.set(e.e1, e.e2, q);
    for (const auto& [dk, dc] : den.terms()) {
      BiKey rk{e.e1 + dk.e1, e.e2 + dk.e2};
      auto [it, fresh] = rem.emplace(rk, -q * dc);
      if (!fresh) it->second -= q * dc;
      if (it->second == 0) rem.erase(it);
    }
  }
  return out;
}

}  // namespace pmf
