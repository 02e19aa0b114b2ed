// Acceptance gate: runs every contract of the verification suite at full
// sample counts and prints one pass/fail line per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qwalk/verify.hpp"

namespace {

struct Criterion {
  std::string label;
  std::vector<std::string> checks;
};

}  // namespace

int main() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();

  qwalk::SuiteConfig config;
  config.seed = 20240601;
  config.charpoly_samples = 16;
  config.quadratic_samples = 1000;
  config.sextic_samples = 100;
  config.arrow_samples = 1000;
  config.conservation_vectors = 10;

  const auto roster_start = clock::now();
  const qwalk::VerifySummary summary = qwalk::run_verification(config);
  const double suite_seconds =
      std::chrono::duration<double>(clock::now() - roster_start).count();

  const std::vector<Criterion> criteria{
      {"boundary/coin identities on the 20-instance roster (1e-10)",
       {"boundary-isometry", "discriminant-block-formula",
        "coin-reconstruction"}},
      {"determinant factorization at 16 points |lambda| = 2 (1e-8)",
       {"determinant-factorization"}},
      {"spectral lift vs dense oracle; eigenvector residuals; exclusions",
       {"spectrum-oracle", "eigenvector-residual", "excluded-values"}},
      {"dimension ledger integer identities",
       {"dimension-ledger"}},
      {"swap-Grover coin clusters, d = 1..6 (1e-10)",
       {"swap-grover-clusters", "swap-grover-multiplicity"}},
      {"d = 3 closed forms: quadratic roots, degree-6 identity, lift sign",
       {"lattice-quadratic-roots", "lattice-sextic", "lattice-lift-sign"}},
      {"eta coefficients vs arrow char poly, d = 2..4; unit roots",
       {"arrow-charpoly", "unit-roots", "unit-root-multiplicity"}},
      {"zero-momentum degeneration (entrywise 1e-14)",
       {"zero-momentum-degeneration", "zero-momentum-charpoly",
        "zero-momentum-spectrum"}},
      {"general-shift rewrite (1e-12)",
       {"flipflop-rewrite"}},
      {"torus stochastic sums and conservation (1e-10)",
       {"doubly-stochastic-sums", "conservation"}},
  };

  bool all_ok = true;
  int index = 0;
  for (const auto& criterion : criteria) {
    ++index;
    bool ok = true;
    double worst = 0.0;
    std::string failed;
    for (const auto& name : criterion.checks) {
      const qwalk::CheckResult* check = summary.find(name);
      if (check == nullptr) {
        ok = false;
        failed = name + " missing";
        continue;
      }
      ok = ok && check->pass;
      worst = std::max(worst, check->threshold > 0.0
                                  ? check->value / check->threshold
                                  : check->value);
      if (!check->pass && failed.empty()) {
        failed = name + " = " + std::to_string(check->value) + " " +
                 check->detail;
      }
    }
    if (index == 1 && suite_seconds >= 10.0) {
      ok = false;  // the identity roster must finish inside 10 s
      failed = "suite took " + std::to_string(suite_seconds) + " s";
    }
    all_ok = all_ok && ok;
    std::printf("[%2d] %s  %s (worst/threshold %.2e)%s%s\n", index,
                ok ? "PASS" : "FAIL", criterion.label.c_str(), worst,
                failed.empty() ? "" : " -- ", failed.c_str());
  }

  std::printf("suite runtime %.1f s\n", suite_seconds);
  if (suite_seconds > 60.0) {
    std::printf("[--] FAIL  runtime exceeds one minute\n");
    all_ok = false;
  }
  std::printf(all_ok ? "ACCEPTANCE PASSED\n" : "ACCEPTANCE FAILED\n");
  const double total =
      std::chrono::duration<double>(clock::now() - t0).count();
  std::printf("total %.1f s\n", total);
  return all_ok ? 0 : 1;
}
