// Acceptance harness: one pass/fail line per criterion, exit 0 only when
// every criterion holds. Criteria 1-13 are backed by the library's
// verification suites (run once each, timed against their budgets);
// criterion 14 runs the randomized property suites.
//
// Usage: acceptance [data-dir]   (default: $PARAMOD_DATA or ./data)

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "pmf/suites.hpp"
#include "property_suites.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct SuiteRun {
  pmf::SuiteResult result;
  double seconds = 0.0;
};

struct Criterion {
  int number;
  std::string description;
  std::vector<std::string> check_ids;  // "suite/check"
  double budget_seconds;               // 0 = no explicit budget
};

bool check_passed(const std::map<std::string, SuiteRun>& runs,
                  const std::string& qualified, std::string& detail) {
  auto slash = qualified.find('/');
  const std::string suite = qualified.substr(0, slash);
  const std::string id = qualified.substr(slash + 1);
  auto it = runs.find(suite);
  if (it == runs.end()) {
    detail = "suite " + suite + " missing";
    return false;
  }
  for (const auto& c : it->second.result.checks)
    if (c.id == id) {
      if (c.status == pmf::CheckStatus::pass) return true;
      detail = qualified +
               (c.status == pmf::CheckStatus::fail ? " failed" : " undecided");
      if (!c.witness.empty()) detail += " [" + c.witness + "]";
      return false;
    }
  detail = qualified + " not found";
  return false;
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = "data";
  if (const char* env = std::getenv("PARAMOD_DATA")) data_dir = env;
  if (argc > 1) data_dir = argv[1];

  std::map<std::string, SuiteRun> runs;
  for (const std::string name :
       {"classical", "deghilb", "paramod", "sympcheck", "hilbert"}) {
    auto t0 = Clock::now();
    try {
      runs[name].result = pmf::run_suites(name, data_dir).at(0);
    } catch (const std::exception& e) {
      std::cerr << "error running suite " << name << ": " << e.what() << "\n";
      runs[name].result = {name, {{"suite-run", pmf::CheckStatus::fail, e.what()}}};
    }
    runs[name].seconds =
        std::chrono::duration<double>(Clock::now() - t0).count();
  }

  const std::vector<Criterion> criteria = {
      {1, "weight-12 eta power factors exactly over the weight-2 generators",
       {"classical/eta12-gamma2-factorization"}, 1.0},
      {2, "the two constructions of Delta6 agree on the (10,10) window",
       {"deghilb/delta6-dual-construction"}, 30.0},
      {3, "the quadratic relation residual vanishes and a perturbed "
          "coefficient is detected",
       {"deghilb/relation-R-residual-zero",
        "deghilb/relation-R-perturbation-detected"}, 60.0},
      {4, "boundary images of X2, X4, Delta6 and X8 match the closed forms",
       {"deghilb/phi-images"}, 0.0},
      {5, "symmetric-subring dimensions match the predicted Hilbert series",
       {"hilbert/a-star-sym-hilbert-series"}, 0.0},
      {6, "full-subring dimensions match the predicted Hilbert series",
       {"hilbert/a-star-hilbert-series"}, 0.0},
      {7, "free-module audit holds with the single relation in weight 16",
       {"hilbert/mg-hironaka-audit", "hilbert/mg-relation-at-16"}, 0.0},
      {8, "level-5 lift restriction rows match the predicted products",
       {"paramod/p4-lift-level5"}, 0.0},
      {9, "level-7 lift restriction rows match the predicted products",
       {"paramod/p4-lift-level7"}, 0.0},
      {10, "the sqrt-2 pullback coefficient equals the interior Jacobi "
           "coefficient",
       {"paramod/p8-coefficient-claim"}, 0.0},
      {11, "diagonal Taylor moments of the weight-7 lift vanish or match",
       {"paramod/diagonal-moments-weight7"}, 0.0},
      {12, "both graded-ring numerators are palindromic and not cyclotomic "
           "products",
       {"hilbert/level5-stanley-criteria", "hilbert/level7-stanley-criteria"},
       0.0},
      {13, "symplectic membership, embeddings and involution identities",
       {"sympcheck/h5-lemma-matrix", "sympcheck/h8-lemma-matrix",
        "sympcheck/translations", "sympcheck/phi1-membership-homomorphism",
        "sympcheck/phi4-membership-homomorphism", "sympcheck/phi4-intertwining",
        "sympcheck/fricke-swap-conjugation", "sympcheck/fricke-fixes-h5",
        "sympcheck/moebius-action-law"}, 10.0},
  };

  bool all_ok = true;
  for (const auto& cr : criteria) {
    bool ok = true;
    std::string detail;
    double elapsed = 0.0;
    for (const auto& qualified : cr.check_ids) {
      std::string why;
      if (!check_passed(runs, qualified, why)) {
        ok = false;
        if (detail.empty()) detail = why;
      }
      elapsed = std::max(elapsed,
                         runs[qualified.substr(0, qualified.find('/'))].seconds);
    }
    if (ok && cr.budget_seconds > 0 && elapsed > cr.budget_seconds) {
      ok = false;
      detail = "time budget exceeded (" + std::to_string(elapsed) + "s > " +
               std::to_string(cr.budget_seconds) + "s)";
    }
    all_ok = all_ok && ok;
    std::cout << "criterion " << (cr.number < 10 ? " " : "") << cr.number
              << ": " << (ok ? "PASS" : "FAIL") << "  " << cr.description;
    if (!ok && !detail.empty()) std::cout << "  -- " << detail;
    std::cout << "\n";
  }

  // Criterion 14: randomized property suites, 200 seeded instances each.
  {
    const long n = 200;
    std::vector<pmf_test::PropertyReport> reps = {
        pmf_test::prop_ring_axioms(0xA11CE, n),
        pmf_test::prop_truncation_monotonic(0xB0B, n),
        pmf_test::prop_lift_symmetry(0xC0FFEE, n),
        pmf_test::prop_fricke_p4_swap(0xD00D1E, n),
        pmf_test::prop_koecher_closure(0xE66, n)};
    bool ok = true;
    std::string detail;
    for (const auto& rep : reps)
      if (!rep.ok()) {
        ok = false;
        if (detail.empty())
          detail = rep.name + ": " + std::to_string(rep.failures) +
                   " failure(s), first at " + rep.witness;
      }
    all_ok = all_ok && ok;
    std::cout << "criterion 14: " << (ok ? "PASS" : "FAIL")
              << "  randomized property suites (5 x " << n << " instances)";
    if (!ok) std::cout << "  -- " << detail;
    std::cout << "\n";
  }

  return all_ok ? 0 : 1;
}
