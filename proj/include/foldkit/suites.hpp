#pragma once

#include <string>
#include <vector>

namespace foldkit {

struct SuiteFailure {
  std::string graph6;
  std::string expected;
  std::string got;
};

struct VerificationReport {
  std::string suite;
  int instances = 0;
  std::vector<SuiteFailure> failures;
  double wall_ms = 0.0;

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  int max_n = -1;     // -1: suite default (6 fold suites, 5 reduction, 9 threshold, 12 marcu)
  unsigned seed = 1;  // join suite RNG
  int pair_count = 50;
};

// Suites: interpolation, reduction-lemma, threshold, marcu, join, fold-chi,
// chi-step. Throws PreconditionError for unknown names or out-of-bound max_n.
VerificationReport run_suite(const std::string& name, const SuiteOptions& opts = {});

std::vector<std::string> suite_names();

}  // namespace foldkit
