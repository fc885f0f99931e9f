#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tgp {

struct CheckResult {
  std::string check;
  std::string lam;
  std::string params;
  bool pass = false;
  std::string note;
};

struct SuiteReport {
  int max_d = 0;
  int trials = 0;
  uint64_t seed = 0;
  std::vector<CheckResult> results;

  int passed() const;
  int failed() const;
  bool all_pass() const { return failed() == 0; }
};

/// Worker pool size: TGP_THREADS when set, otherwise a small default.
int thread_budget();

/// Batch verification over all lambda |- d <= max_d: flatness, graded
/// character, generator reduction, symmetric evaluation, splitting,
/// annihilation, the Schur-Weyl character identity, shift/scale, and the
/// three-limit golden example. Checks fan out over `threads` workers;
/// result order is canonical and independent of scheduling.
SuiteReport run_suite(int max_d, int trials, uint64_t seed, int threads);

}  // namespace tgp
