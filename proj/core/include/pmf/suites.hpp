#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pmf/sympcheck.hpp"

namespace pmf {

/// Verification outcome of one named check. "undecided" means the
/// available truncation window could not decide the identity; it is
/// distinct from an actual failure.
enum class CheckStatus { pass, fail, undecided };

struct CheckResult {
  std::string id;
  CheckStatus status;
  std::string witness;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;

  bool all_pass() const;
  bool any_fail() const;
};

SuiteResult suite_classical();
SuiteResult suite_deghilb();
/// Needs the Jacobi data directory (level5/, level7/ subdirectories).
SuiteResult suite_paramod(const std::string& data_dir);
SuiteResult suite_sympcheck();
SuiteResult suite_hilbert();

/// name in {classical, deghilb, paramod, sympcheck, hilbert, all}.
std::vector<SuiteResult> run_suites(const std::string& name,
                                    const std::string& data_dir);

/// 0 when everything passed, 1 when any check failed or was undecided.
int suites_exit_code(const std::vector<SuiteResult>& results);

/// Reproducible SL2(Z) elements as short words in S and T, and pairs
/// congruent mod 2 (second element differs by a word in Gamma(2)).
class Sl2Sampler {
 public:
  explicit Sl2Sampler(unsigned long seed) : rng_(seed) {}

  SL2 next();
  /// A word in the generators of Gamma(2): T^2, lower T^2, and -I.
  SL2 next_gamma2();
  /// (m, m * g) with g in Gamma(2), hence congruent mod 2.
  std::pair<SL2, SL2> next_congruent_pair();

 private:
  std::mt19937_64 rng_;
};

}  // namespace pmf
