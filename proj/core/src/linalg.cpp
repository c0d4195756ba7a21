#include "pmf/linalg.hpp"

#include <algorithm>

namespace pmf {

namespace {

// Clears denominators row by row; Bareiss stays in integers afterwards.
std::vector<std::vector<Integer>> integer_scale(const RatMat& m) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.size());
  for (const auto& row : m) {
    Integer l = 1;
    for (const auto& x : row) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> r;
    r.reserve(row.size());
    for (const auto& x : row) {
      Rational v = x * Rational(l);
      v.canonicalize();
      r.emplace_back(v.get_num());
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Reduced row echelon form in place; returns pivot column per pivot row.
std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

long rank(const RatMat& m) {
  if (m.empty() || m[0].empty()) return 0;
  auto a = integer_scale(m);
  std::size_t rows = a.size(), cols = a[0].size(), r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t best = rows;
    std::size_t best_bits = 0;
    for (std::size_t i = r; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      std::size_t bits = mpz_sizeinbase(a[i][c].get_mpz_t(), 2);
      if (best == rows || bits < best_bits) best = i, best_bits = bits;
    }
    if (best == rows) continue;
    std::swap(a[r], a[best]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return static_cast<long>(r);
}

RatMat nullspace(const RatMat& m) {
  RatMat out;
  if (m.empty() || m[0].empty()) return out;
  RatMat a = m;
  auto pivots = rref(a);
  std::size_t cols = m[0].size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch");
  if (a.empty()) return RatVec{};
  std::size_t cols = a[0].size();
  RatMat aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][cols];
  return x;
}

}  // namespace pmf
