#include "pmf/classical.hpp"

#include <mutex>
#include <numeric>

namespace pmf {

namespace {

// B_m via sum_{j=0}^{m} C(m+1,j) B_j = 0, memoized.
const Rational& bernoulli_all(std::size_t m) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    std::size_t n = cache.size();
    Rational acc(0);
    Integer binom = 1;  // C(n+1, j) built incrementally
    for (std::size_t j = 0; j < n; ++j) {
      acc += Rational(binom) * cache[j];
      binom = binom * (Integer(n) + 1 - Integer(j)) / (Integer(j) + 1);
    }
    cache.push_back(-acc / Rational(binom));
  }
  return cache[m];
}

QExp eisenstein_shape(long k, const Rational& scale, const Rational& trunc) {
  QExp f(1, trunc);
  f.set(Rational(0), Rational(1));
  for (Integer n = 1; Rational(n) < trunc; ++n)
    f.set(Rational(n), scale * Rational(sigma(n, k - 1)));
  return f;
}

}  // namespace

Rational bernoulli(long k) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("bernoulli requires even k >= 2");
  return bernoulli_all(static_cast<std::size_t>(k));
}

Integer sigma(const Integer& n, unsigned long k) {
  if (n < 1) throw std::invalid_argument("sigma requires n >= 1");
  Integer acc = 0;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer dk, ek;
    mpz_pow_ui(dk.get_mpz_t(), d.get_mpz_t(), k);
    acc += dk;
    Integer e = n / d;
    if (e != d) {
      mpz_pow_ui(ek.get_mpz_t(), e.get_mpz_t(), k);
      acc += ek;
    }
  }
  return acc;
}

ClassicalForm eisenstein(long k, const Rational& trunc) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("eisenstein requires even k >= 4");
  Rational scale = Rational(-2 * k) / bernoulli(k);
  return {k, eisenstein_shape(k, scale, trunc), "E" + std::to_string(k)};
}

ClassicalForm eisenstein2(const Rational& trunc) {
  return {2, eisenstein_shape(2, Rational(-24), trunc), "E2"};
}

ClassicalForm gamma2_e1(const Rational& trunc) {
  QExp e2 = eisenstein2(trunc).expansion;
  QExp doubled = substitute_scale_up(e2, 2).with_trunc(trunc);
  return {2, Rational(2) * doubled - e2, "e1"};
}

ClassicalForm gamma2_e2(const Rational& trunc) {
  QExp e2 = eisenstein2(trunc).expansion;
  QExp halved = substitute_scale_down(eisenstein2(trunc * 2).expansion, 2);
  return {2, e2 - Rational(1, 2) * halved, "e2"};
}

ClassicalForm eta_power(long m, const Rational& trunc) {
  if (m < 1) throw std::invalid_argument("eta_power requires m >= 1");
  QExp euler(1, trunc);
  euler.set(Rational(0), Rational(1));
  for (Integer n = 1; Rational(n) < trunc; ++n) {
    QExp factor(1, trunc);
    factor.set(Rational(0), Rational(1));
    factor.set(Rational(n), Rational(-1));
    euler = euler * factor;
  }
  QExp powed = euler.pow(static_cast<unsigned long>(m));
  Rational shift(m, 24);
  shift.canonicalize();
  long grain = std::lcm(powed.grain(), static_cast<long>(shift.get_den().get_si()));
  QExp out(grain, powed.trunc() + shift);
  for (const auto& [e, c] : powed.terms()) out.set(e + shift, c);
  return {m / 2, out, "eta^" + std::to_string(m)};
}

std::optional<RatVec> level1_membership(const QExp& f, long k) {
  if (k % 2 != 0) throw std::invalid_argument("weight must be even");
  std::vector<std::pair<long, long>> monos;  // (a, b) with 4a + 6b = k
  if (k >= 0)
    for (long b = 0; 6 * b <= k; ++b)
      if ((k - 6 * b) % 4 == 0) monos.emplace_back((k - 6 * b) / 4, b);
  QExp scaled = f;
  if (f.grain() != 1) {
    // Level-1 forms have integer exponents: fractional support settles it.
    for (const auto& [e, c] : f.terms())
      if (!is_integer(e)) return std::nullopt;
    scaled = QExp(1, f.trunc() < 1 ? f.trunc() : Rational(floor_int(f.trunc())));
    for (const auto& [e, c] : f.terms())
      if (e < scaled.trunc()) scaled.set(e, c);
  }
  Integer slots_i = floor_int(scaled.trunc());
  if (slots_i < 0) slots_i = 0;
  long slots = static_cast<long>(slots_i.get_si());
  if (slots <= static_cast<long>(monos.size()))
    throw TruncationError("truncation too small to decide level-1 membership");
  if (monos.empty()) return f.is_zero() ? std::optional<RatVec>(RatVec{}) : std::nullopt;

  Rational window(slots);
  QExp e4 = eisenstein(4, window).expansion;
  QExp e6 = eisenstein(6, window).expansion;
  RatMat a(static_cast<std::size_t>(slots), RatVec(monos.size(), Rational(0)));
  RatVec b(static_cast<std::size_t>(slots), Rational(0));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    QExp mono = e4.pow(monos[j].first) * e6.pow(monos[j].second);
    for (long i = 0; i < slots; ++i) a[i][j] = mono.coeff(Rational(i));
  }
  for (long i = 0; i < slots; ++i)
    b[i] = Rational(i) < scaled.trunc() ? scaled.coeff(Rational(i)) : Rational(0);
  return solve(a, b);
}

}  // namespace pmf
