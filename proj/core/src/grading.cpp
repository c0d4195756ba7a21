#include "pmf/grading.hpp"

#include "pmf/hilbert_series.hpp"

namespace pmf {

namespace {

void monomials_rec(const std::vector<long>& weights, std::size_t i, long k,
                   std::vector<long>& cur,
                   std::vector<std::vector<long>>& out) {
  if (i + 1 == weights.size()) {
    if (k % weights[i] == 0) {
      cur.push_back(k / weights[i]);
      out.push_back(cur);
      cur.pop_back();
    }
    return;
  }
  // Descending exponent on the current generator keeps the output in
  // lexicographically decreasing order of exponent vectors.
  for (long e = k / weights[i]; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(weights, i + 1, k - e * weights[i], cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> monomials_of_weight(
    const std::vector<long>& weights, long k) {
  if (weights.empty()) throw std::invalid_argument("no generator weights");
  for (long w : weights)
    if (w <= 0) throw std::invalid_argument("generator weights must be positive");
  std::vector<std::vector<long>> out;
  if (k < 0) return out;
  if (k == 0) {
    out.emplace_back(weights.size(), 0);
    return out;
  }
  std::vector<long> cur;
  monomials_rec(weights, 0, k, cur, out);
  return out;
}

RatVec window_vector(const QExp& x, const Rational& cap, long grain) {
  if (cap > x.trunc())
    throw TruncationError("window cap beyond the trusted truncation");
  Rational step(1, grain);
  RatVec out;
  for (Rational e(0); e < cap; e += step) out.push_back(x.coeff(e));
  return out;
}

RatVec window_vector(const BiExp& x, const Rational& cap1, const Rational& cap2,
                     long grain1, long grain2) {
  if (cap1 > x.trunc1() || cap2 > x.trunc2())
    throw TruncationError("window cap beyond the trusted truncation");
  Rational step1(1, grain1), step2(1, grain2);
  RatVec out;
  for (Rational e1(0); e1 < cap1; e1 += step1)
    for (Rational e2(0); e2 < cap2; e2 += step2)
      out.push_back(x.coeff(e1, e2));
  return out;
}

long hironaka_predicted(const std::vector<long>& free_weights,
                        const std::vector<long>& module_weights, long k) {
  if (k < 0) return 0;
  HilbertSeries h{{Integer(1)}, free_weights};
  auto counts = hilbert_expand(h, k);
  Integer total = counts.at(static_cast<std::size_t>(k));
  for (long m : module_weights)
    if (k >= m) total += counts.at(static_cast<std::size_t>(k - m));
  return static_cast<long>(total.get_si());
}

}  // namespace pmf
