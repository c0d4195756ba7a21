#include "pmf/paramodular.hpp"

#include "pmf/classical.hpp"

namespace pmf {

namespace {

bool koecher_ok(long level, long a, long b, long c) {
  if (a < 0 || c < 0) return false;
  Integer lhs = Integer(b) * Integer(b);
  Integer rhs = Integer(4) * level * Integer(a) * Integer(c);
  return lhs <= rhs;
}

}  // namespace

ParamodularSeries::ParamodularSeries(long level, long weight, long amax, long cmax)
    : level_(level), weight_(weight), amax_(amax), cmax_(cmax) {
  if (level_ < 1) throw std::invalid_argument("level must be positive");
  if (amax_ < 0 || cmax_ < 0) throw std::invalid_argument("negative box");
}

void ParamodularSeries::set(long a, long b, long c, const Rational& value) {
  if (a > amax_ || c > cmax_)
    throw std::invalid_argument("coefficient outside the box");
  if (value != 0 && !koecher_ok(level_, a, b, c))
    throw std::invalid_argument("support violation at (" + std::to_string(a) +
                                "," + std::to_string(b) + "," +
                                std::to_string(c) + ")");
  auto key = std::make_tuple(a, c, b);
  if (value == 0)
    terms_.erase(key);
  else
    terms_[key] = value;
}

Rational ParamodularSeries::coeff(long a, long b, long c) const {
  if (!koecher_ok(level_, a, b, c)) return Rational(0);
  if (a > amax_ || c > cmax_)
    throw TruncationError("coefficient (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) +
                          ") outside the trusted box");
  auto it = terms_.find(std::make_tuple(a, c, b));
  return it == terms_.end() ? Rational(0) : it->second;
}

ParamodularSeries operator+(const ParamodularSeries& x, const ParamodularSeries& y) {
  if (x.level_ != y.level_) throw std::invalid_argument("level mismatch");
  if (x.weight_ != y.weight_) throw std::invalid_argument("weight mismatch");
  ParamodularSeries out(x.level_, x.weight_, std::min(x.amax_, y.amax_),
                        std::min(x.cmax_, y.cmax_));
  auto in_box = [&](const std::tuple<long, long, long>& k) {
    return std::get<0>(k) <= out.amax_ && std::get<1>(k) <= out.cmax_;
  };
  for (const auto& [k, v] : x.terms_)
    if (in_box(k)) out.terms_[k] = v;
  for (const auto& [k, v] : y.terms_) {
    if (!in_box(k)) continue;
    auto [it, fresh] = out.terms_.emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

ParamodularSeries ParamodularSeries::operator-() const {
  ParamodularSeries out(level_, weight_, amax_, cmax_);
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, -v);
  return out;
}

ParamodularSeries operator-(const ParamodularSeries& x, const ParamodularSeries& y) {
  return x + (-y);
}

ParamodularSeries operator*(const Rational& c, const ParamodularSeries& x) {
  ParamodularSeries out(x.level_, x.weight_, x.amax_, x.cmax_);
  if (c == 0) return out;
  for (const auto& [k, v] : x.terms_) out.terms_.emplace(k, c * v);
  return out;
}

ParamodularSeries operator*(const ParamodularSeries& x, const ParamodularSeries& y) {
  if (x.level_ != y.level_) throw std::invalid_argument("level mismatch");
  ParamodularSeries out(x.level_, x.weight_ + y.weight_,
                        std::min(x.amax_, y.amax_), std::min(x.cmax_, y.cmax_));
  for (const auto& [k1, v1] : x.terms_)
    for (const auto& [k2, v2] : y.terms_) {
      long a = std::get<0>(k1) + std::get<0>(k2);
      long c = std::get<1>(k1) + std::get<1>(k2);
      long b = std::get<2>(k1) + std::get<2>(k2);
      if (a > out.amax_ || c > out.cmax_) continue;
      if (!koecher_ok(out.level_, a, b, c))
        throw std::logic_error("product escapes the Koecher bound");
      auto [it, fresh] = out.terms_.emplace(std::make_tuple(a, c, b), v1 * v2);
      if (!fresh) it->second += v1 * v2;
    }
  for (auto it = out.terms_.begin(); it != out.terms_.end();)
    it = it->second == 0 ? out.terms_.erase(it) : std::next(it);
  return out;
}

bool operator==(const ParamodularSeries& x, const ParamodularSeries& y) {
  return x.level_ == y.level_ && x.weight_ == y.weight_ && x.amax_ == y.amax_ &&
         x.cmax_ == y.cmax_ && x.terms_ == y.terms_;
}

Rational lift_coefficient(const JacobiFormData& phi, long a, long b, long c) {
  long k = phi.weight();
  long n = phi.index();
  if (!koecher_ok(n, a, b, c)) return Rational(0);
  if (a == 0 && c == 0) {
    if (k % 2 != 0) return Rational(0);
    return -bernoulli(k) / Rational(2 * k) * phi.c(0, 0);
  }
  if (a == 0 || c == 0) {
    // b = 0 forced by the support bound; the Eisenstein boundary rows.
    if (k % 2 != 0) return Rational(0);
    return phi.c(0, 0) * Rational(sigma(Integer(a + c), k - 1));
  }
  Integer g = gcd3(Integer(a), Integer(b < 0 ? -b : b), Integer(c));
  Rational acc(0);
  for (Integer d = 1; d <= g; ++d) {
    if (g % d != 0) continue;
    Integer dk;
    mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(k - 1));
    long dl = static_cast<long>(d.get_si());
    acc += Rational(dk) * phi.c(a * c / (dl * dl), b / dl);
  }
  return acc;
}

ParamodularSeries gritsenko_lift(const JacobiFormData& phi, long amax, long cmax) {
  ParamodularSeries out(phi.index(), phi.weight(), amax, cmax);
  for (long a = 0; a <= amax; ++a)
    for (long c = 0; c <= cmax; ++c) {
      long bmax = static_cast<long>(
          isqrt(Integer(4) * phi.index() * Integer(a) * Integer(c)).get_si());
      for (long b = -bmax; b <= bmax; ++b)
        out.set(a, b, c, lift_coefficient(phi, a, b, c));
    }
  return out;
}

ParamodularSeries eisenstein_paramodular(const JacobiFormData& phi, long amax,
                                         long cmax) {
  long k = phi.weight();
  if (k % 2 != 0 || k < 4)
    throw std::invalid_argument("Eisenstein lift needs even weight >= 4");
  if (phi.c(0, 0) == 0)
    throw DataError("Eisenstein data must have c(0,0) != 0");
  Rational scale = Rational(-2 * k) / bernoulli(k);
  return scale * gritsenko_lift(phi, amax, cmax);
}

ParamodularSeries fricke_permute(const ParamodularSeries& f) {
  if (f.amax() != f.cmax())
    throw std::invalid_argument("Fricke permutation needs a symmetric box");
  ParamodularSeries out(f.level(), f.weight(), f.amax(), f.cmax());
  for (const auto& [k, v] : f.terms())
    out.set(std::get<1>(k), -std::get<2>(k), std::get<0>(k), v);
  return out;
}

std::optional<int> fricke_eigenvalue(const ParamodularSeries& f) {
  ParamodularSeries g = fricke_permute(f);
  if (g == f) return 1;
  if (g == -f) return -1;
  return std::nullopt;
}

}  // namespace pmf
