#pragma once

#include <string>
#include <vector>

namespace qwalk {

/// Sample counts and seeding for the verification suite. The defaults match
/// the acceptance gate; smaller counts make quick smoke runs.
struct SuiteConfig {
  unsigned long long seed = 20240601;
  int charpoly_samples = 16;         ///< points on |lambda| = 2 per instance
  int quadratic_samples = 1000;      ///< random k for the d=3 closed forms
  int sextic_samples = 100;          ///< random k for the degree-6 identity
  int arrow_samples = 1000;          ///< random k per d for the eta check
  int conservation_vectors = 10;
  std::string fault;                 ///< "" or "corrupt-K" (negative control)
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;      ///< worst deviation, or violation count
  double threshold = 0.0;
  std::string detail;
};

struct VerifySummary {
  std::vector<CheckResult> checks;
  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every invariant family on the seeded instance roster plus the
/// momentum-space identities; returns one result line per check.
VerifySummary run_verification(const SuiteConfig& config = {});

}  // namespace qwalk
