#include "pmf/hilbert_series.hpp"

#include <map>

namespace pmf {

namespace {

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

IntPoly poly_mul(const IntPoly& x, const IntPoly& y) {
  if (x.empty() || y.empty()) return {};
  IntPoly out(x.size() + y.size() - 1, Integer(0));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] += x[i] * y[j];
  trim(out);
  return out;
}

IntPoly poly_div_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly n = num, d = den;
  trim(n);
  trim(d);
  if (d.empty()) throw std::invalid_argument("division by zero polynomial");
  if (n.empty()) return {};
  if (n.size() < d.size()) return {};
  IntPoly q(n.size() - d.size() + 1, Integer(0));
  for (std::size_t i = q.size(); i-- > 0;) {
    Integer lead = n[i + d.size() - 1];
    if (lead % d.back() != 0) return {};
    q[i] = lead / d.back();
    for (std::size_t j = 0; j < d.size(); ++j) n[i + j] -= q[i] * d[j];
  }
  for (const auto& c : n)
    if (c != 0) return {};
  trim(q);
  return q;
}

std::vector<Integer> hilbert_expand(const HilbertSeries& h, long kmax) {
  std::vector<Integer> out(static_cast<std::size_t>(kmax) + 1, Integer(0));
  for (std::size_t i = 0; i < h.numerator.size() && i < out.size(); ++i)
    out[i] = h.numerator[i];
  // Multiplying by 1/(1 - t^d) is a running sum with stride d.
  for (long d : h.denominator_factors) {
    if (d < 1) throw std::invalid_argument("denominator exponent must be positive");
    for (std::size_t i = static_cast<std::size_t>(d); i < out.size(); ++i)
      out[i] += out[i - d];
  }
  return out;
}

bool palindrome_test(const IntPoly& p) {
  IntPoly q = p;
  trim(q);
  if (q.empty()) return true;
  for (std::size_t i = 0, j = q.size() - 1; i < j; ++i, --j)
    if (q[i] != q[j]) return false;
  return true;
}

IntPoly cyclotomic(long n) {
  static std::map<long, IntPoly> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n < 1) throw std::invalid_argument("cyclotomic index must be positive");
  // x^n - 1 divided by the cyclotomics of the proper divisors.
  IntPoly p(static_cast<std::size_t>(n) + 1, Integer(0));
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    p = poly_div_exact(p, cyclotomic(d));
    if (p.empty()) throw std::logic_error("cyclotomic recursion failed");
  }
  cache[n] = p;
  return p;
}

bool cyclotomic_product_test(const IntPoly& p) {
  IntPoly q = p;
  trim(q);
  if (q.empty() || q[0] == 0) throw std::invalid_argument("p(0) must be nonzero");
  long bound = 2 * static_cast<long>(q.size());
  for (long n = 1; n <= bound && q.size() > 1; ++n) {
    for (;;) {
      IntPoly next = poly_div_exact(q, cyclotomic(n));
      if (next.empty()) break;
      q = next;
    }
  }
  return q.size() == 1 && q[0] == 1;
}

}  // namespace pmf
