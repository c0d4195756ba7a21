#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "pmf/biexp.hpp"
#include "pmf/linalg.hpp"
#include "pmf/qexp.hpp"

namespace pmf {

/// A labeled generator for graded-ring analytics.
template <class S>
struct LabeledSeries {
  std::string label;
  long weight;
  S expansion;
};

/// All exponent vectors (m_i) with sum m_i w_i = k, lexicographic order.
std::vector<std::vector<long>> monomials_of_weight(const std::vector<long>& weights,
                                                   long k);

/// Coefficients of x on the fixed 1/grain grid up to the given cap(s);
/// the caps must not exceed the trusted window. The stability protocol
/// compares ranks on nested caps, and the fixed cap and grid keep all
/// matrix rows the same length. Off-grid stored exponents of x simply do
/// not appear; exponents off x's own (coarser) grid read as zero.
RatVec window_vector(const QExp& x, const Rational& cap, long grain);
RatVec window_vector(const BiExp& x, const Rational& cap1, const Rational& cap2,
                     long grain1, long grain2);

namespace detail {

template <class S>
S monomial_series(const std::vector<LabeledSeries<S>>& gens,
                  const std::vector<long>& expo) {
  S acc = gens.at(0).expansion.pow(0);
  for (std::size_t i = 0; i < expo.size(); ++i)
    if (expo[i] > 0)
      acc = acc * gens[i].expansion.pow(static_cast<unsigned long>(expo[i]));
  return acc;
}

inline RatVec grid_row(const QExp& x, const std::vector<LabeledSeries<QExp>>& gens,
                       long num, long den) {
  Rational cap = gens.front().expansion.trunc();
  long grain = 1;
  for (const auto& g : gens) {
    cap = std::min(cap, g.expansion.trunc());
    grain = std::lcm(grain, g.expansion.grain());
  }
  return window_vector(x, cap * Rational(num, den), grain);
}

inline RatVec grid_row(const BiExp& x, const std::vector<LabeledSeries<BiExp>>& gens,
                       long num, long den) {
  Rational c1 = gens.front().expansion.trunc1();
  Rational c2 = gens.front().expansion.trunc2();
  long grain1 = 1, grain2 = 1;
  for (const auto& g : gens) {
    c1 = std::min(c1, g.expansion.trunc1());
    c2 = std::min(c2, g.expansion.trunc2());
    grain1 = std::lcm(grain1, g.expansion.grain1());
    grain2 = std::lcm(grain2, g.expansion.grain2());
  }
  Rational s(num, den);
  return window_vector(x, c1 * s, c2 * s, grain1, grain2);
}

template <class S>
RatMat monomial_matrix(const std::vector<LabeledSeries<S>>& gens,
                       const std::vector<std::vector<long>>& monos, long num,
                       long den) {
  RatMat rows;
  rows.reserve(monos.size());
  for (const auto& e : monos)
    rows.push_back(grid_row(monomial_series(gens, e), gens, num, den));
  return rows;
}

}  // namespace detail

/// Rank of the weight-k monomial expansions over Q. The answer is trusted
/// only when the full window and a 3/4-scaled window agree and there are
/// strictly more coefficient slots than monomials; otherwise throws
/// TruncationError.
template <class S>
long dimension_by_rank(const std::vector<LabeledSeries<S>>& gens, long k) {
  std::vector<long> weights;
  for (const auto& g : gens) weights.push_back(g.weight);
  auto monos = monomials_of_weight(weights, k);
  if (monos.empty()) return 0;
  RatMat full = detail::monomial_matrix(gens, monos, 1, 1);
  RatMat part = detail::monomial_matrix(gens, monos, 3, 4);
  if (full.at(0).size() <= monos.size() || part.at(0).empty())
    throw TruncationError("window too small for rank at weight " +
                          std::to_string(k));
  long r_full = rank(full);
  long r_part = rank(part);
  if (r_full != r_part)
    throw TruncationError("rank unstable between windows at weight " +
                          std::to_string(k));
  return r_full;
}

/// A relation among weight-k monomials: coefficients aligned with the
/// exponent vectors.
struct Relation {
  std::vector<std::vector<long>> monomials;
  RatMat kernel;
};

/// Exact kernel of the monomial-coefficient matrix, window-checked as in
/// dimension_by_rank.
template <class S>
Relation relations_in_weight(const std::vector<LabeledSeries<S>>& gens, long k) {
  std::vector<long> weights;
  for (const auto& g : gens) weights.push_back(g.weight);
  auto monos = monomials_of_weight(weights, k);
  Relation out{monos, {}};
  if (monos.empty()) return out;
  long dim = dimension_by_rank(gens, k);  // enforces the stability protocol
  RatMat rows = detail::monomial_matrix(gens, monos, 1, 1);
  // Kernel vectors combine rows to zero: null space of the transpose.
  RatMat t(rows.at(0).size(), RatVec(rows.size(), Rational(0)));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) t[j][i] = rows[i][j];
  out.kernel = nullspace(t);
  if (static_cast<long>(monos.size()) - dim != static_cast<long>(out.kernel.size()))
    throw std::logic_error("kernel dimension disagrees with rank");
  return out;
}

/// Hironaka audit row: predicted free-module dimension vs computed rank.
struct AuditRow {
  long weight;
  long predicted;
  long computed;
};

/// Predicted dimension of the free module over the free part with the
/// given module generator weights (1 is implicit via the empty product).
long hironaka_predicted(const std::vector<long>& free_weights,
                        const std::vector<long>& module_weights, long k);

}  // namespace pmf
