#include <doctest.h>

#include "pmf/classical.hpp"
#include "pmf/grading.hpp"
#include "test_util.hpp"

using namespace pmf;

namespace {

// DP oracle for the number of exponent vectors of a given weight.
long monomial_count_oracle(const std::vector<long>& weights, long k) {
  std::vector<long> dp(static_cast<std::size_t>(k) + 1, 0);
  dp[0] = 1;
  std::vector<std::vector<long>> table(weights.size() + 1, dp);
  for (std::size_t i = 1; i <= weights.size(); ++i)
    for (long j = 0; j <= k; ++j) {
      table[i][j] = table[i - 1][j];
      if (j >= weights[i - 1]) table[i][j] += table[i][j - weights[i - 1]];
    }
  return table[weights.size()][k];
}

}  // namespace

TEST_CASE("monomials_of_weight enumerates exactly and in order") {
  pmf_test::Rng rng(301);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> weights;
    int n = static_cast<int>(pmf_test::rand_int(rng, 1, 4));
    for (int i = 0; i < n; ++i) weights.push_back(pmf_test::rand_int(rng, 1, 6));
    long k = pmf_test::rand_int(rng, 0, 14);
    auto monos = monomials_of_weight(weights, k);
    CHECK(static_cast<long>(monos.size()) == monomial_count_oracle(weights, k));
    for (std::size_t i = 0; i < monos.size(); ++i) {
      long total = 0;
      for (std::size_t j = 0; j < weights.size(); ++j)
        total += monos[i][j] * weights[j];
      CHECK(total == k);
      if (i > 0) CHECK(monos[i - 1] > monos[i]);  // strictly decreasing lex
    }
  }
  CHECK(monomials_of_weight({2, 4}, 8).size() == 3);
  CHECK_THROWS_AS(monomials_of_weight({0}, 2), std::invalid_argument);
}

TEST_CASE("window_vector reads the fixed grid") {
  QExp x(2, Rational(3));
  x.set(rational(1, 2), Rational(4));
  x.set(Rational(2), Rational(-1));
  RatVec v = window_vector(x, Rational(3), 2);
  REQUIRE(v.size() == 6);
  CHECK(v[0] == 0);
  CHECK(v[1] == 4);
  CHECK(v[4] == -1);
  CHECK_THROWS_AS(window_vector(x, Rational(4), 2), TruncationError);
}

TEST_CASE("dimension_by_rank on free and dependent generator sets") {
  Rational t(14);
  std::vector<LabeledSeries<QExp>> free_gens = {
      {"E4", 4, eisenstein(4, t).expansion},
      {"E6", 6, eisenstein(6, t).expansion}};
  // E4 and E6 are algebraically independent: every monomial set is free.
  for (long k = 0; k <= 16; k += 2)
    CHECK(dimension_by_rank(free_gens, k) ==
          static_cast<long>(monomials_of_weight({4, 6}, k).size()));

  std::vector<LabeledSeries<QExp>> dep_gens = free_gens;
  dep_gens.push_back({"E4E6", 10, (eisenstein(4, t).expansion *
                                   eisenstein(6, t).expansion)
                                      .with_trunc(t)});
  // Weight 10 has the monomials E4*E6 and the product generator itself:
  // the same series twice, so the rank is 1.
  CHECK(dimension_by_rank(dep_gens, 10) == 1);
  Relation rel = relations_in_weight(dep_gens, 10);
  REQUIRE(rel.kernel.size() == 1);
  // The kernel must be proportional to E4*E6 - (the product generator).
  const auto& v = rel.kernel[0];
  std::map<std::vector<long>, Rational> entries;
  for (std::size_t i = 0; i < rel.monomials.size(); ++i)
    if (v[i] != 0) entries[rel.monomials[i]] = v[i];
  REQUIRE(entries.size() == 2);
  CHECK(entries.count({1, 1, 0}) == 1);
  CHECK(entries.count({0, 0, 1}) == 1);
  CHECK(entries[{1, 1, 0}] + entries[{0, 0, 1}] == 0);
}

TEST_CASE("dimension_by_rank refuses windows that cannot decide") {
  Rational t(3);
  std::vector<LabeledSeries<QExp>> gens = {
      {"E4", 4, eisenstein(4, t).expansion},
      {"E6", 6, eisenstein(6, t).expansion}};
  // Weight 24 has many monomials but only three coefficient slots.
  CHECK_THROWS_AS(dimension_by_rank(gens, 24), TruncationError);
}

TEST_CASE("hironaka_predicted counts free-module slots") {
  // Free ring on one weight-2 generator, module generator of weight 3:
  // dimension 1 in every even weight plus 1 in every odd weight >= 3.
  for (long k = 0; k <= 10; ++k) {
    long expect = k % 2 == 0 ? 1 : (k >= 3 ? 1 : 0);
    CHECK(hironaka_predicted({2}, {3}, k) == expect);
  }
  // Two free generators of weights 2 and 4 with a weight-6 module shift.
  for (long k = 0; k <= 12; k += 2)
    CHECK(hironaka_predicted({2, 4}, {6}, k) ==
          monomial_count_oracle({2, 4}, k) +
              (k >= 6 ? monomial_count_oracle({2, 4}, k - 6) : 0));
}
