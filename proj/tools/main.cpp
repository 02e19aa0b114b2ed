#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <Eigen/Core>

#include "qwalk/coins.hpp"
#include "qwalk/fourier_lattice.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/json_io.hpp"
#include "qwalk/spectral_lift.hpp"
#include "qwalk/verify.hpp"
#include "qwalk/walk_operator.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitMismatch = 3;

int cmd_analyze(const std::string& graph_path, const std::string& coins_path,
                const std::string& out_path, double tol) {
  qwalk::ReportOptions opts;
  opts.tol_cluster = tol;
  qwalk::SpectrumReport report;
  try {
    const qwalk::Graph g = qwalk::load_graph(graph_path);
    const qwalk::CoinAssignment coins = qwalk::load_coins(coins_path, g);
    try {
      report = qwalk::full_report(g, coins, qwalk::flipflop_shift(g), opts);
    } catch (const qwalk::SpectrumViolation& err) {
      std::cerr << "coin certificate violation: " << err.what() << "\n";
      return kExitInvalid;
    } catch (const qwalk::MultiplicityViolation& err) {
      std::cerr << "coin certificate violation: " << err.what() << "\n";
      return kExitInvalid;
    } catch (const std::invalid_argument& err) {
      std::cerr << "invalid input: " << err.what() << "\n";
      return kExitInvalid;
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "i/o error: " << err.what() << "\n";
    return kExitIo;
  }

  const nlohmann::json j = qwalk::report_to_json(report);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "i/o error: cannot write " << out_path << "\n";
      return kExitIo;
    }
    out << j.dump(2) << "\n";
  }
  if (!report.oracle_ok(opts.tol_oracle)) {
    std::cerr << "oracle mismatch: spectrum multiset distance "
              << report.oracle_delta << "\n";
    return kExitMismatch;
  }
  std::cerr << "ok: oracle delta " << report.oracle_delta << ", ledger (m+ "
            << report.ledger.m_plus << ", m- " << report.ledger.m_minus
            << ", dim L " << report.ledger.dim_inherited << ")\n";
  return kExitOk;
}

int cmd_lattice(int d, int grid, const std::string& convention,
                const std::string& out_path, double tol) {
  if (d < 1 || d > 4 || grid < 1 || grid > 64) {
    std::cerr << "invalid parameters: need 1 <= d <= 4 and 1 <= grid <= 64\n";
    return kExitInvalid;
  }
  qwalk::CoinConvention conv;
  if (convention == "case_i") {
    conv = qwalk::CoinConvention::CaseI;
  } else if (convention == "case_ii") {
    conv = qwalk::CoinConvention::CaseII;
  } else {
    std::cerr << "invalid convention: " << convention << "\n";
    return kExitInvalid;
  }
  qwalk::ReportOptions opts;
  opts.tol_cluster = tol;
  std::vector<qwalk::BandScanRow> rows;
  try {
    rows = qwalk::band_scan(d, grid, conv, opts);
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid parameters: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "scan failed: " << err.what() << "\n";
    return kExitMismatch;
  }
  if (out_path.empty()) {
    qwalk::write_band_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "i/o error: cannot write " << out_path << "\n";
      return kExitIo;
    }
    qwalk::write_band_csv(out, rows);
  }
  std::cerr << "ok: " << rows.size() << " rows verified\n";
  return kExitOk;
}

int cmd_verify(unsigned long long seed, const std::string& fault) {
  qwalk::SuiteConfig config;
  config.seed = seed;
  config.fault = fault;
  // Desk-scale sample counts; the acceptance suite runs the full ones.
  config.quadratic_samples = 200;
  config.sextic_samples = 40;
  config.arrow_samples = 200;
  const qwalk::VerifySummary summary = qwalk::run_verification(config);
  std::printf("seed %llu%s\n", seed,
              fault.empty() ? "" : (" fault=" + fault).c_str());
  std::printf("%-32s %-6s %-12s %-10s %s\n", "check", "status", "worst",
              "threshold", "detail");
  for (const auto& c : summary.checks) {
    std::printf("%-32s %-6s %-12.3e %-10.1e %s\n", c.name.c_str(),
                c.pass ? "PASS" : "FAIL", c.value, c.threshold,
                c.detail.c_str());
  }
  if (!summary.all_pass()) {
    std::printf("FAILED\n");
    return kExitMismatch;
  }
  std::printf("all checks passed\n");
  return kExitOk;
}

int cmd_charpoly(const std::string& graph_path, const std::string& coins_path,
                 int samples, unsigned long long seed) {
  try {
    const qwalk::Graph g = qwalk::load_graph(graph_path);
    const qwalk::CoinAssignment coins = qwalk::load_coins(coins_path, g);
    try {
      qwalk::certify_two_point_spectrum(g, coins);
      const qwalk::KernelBasis cons = qwalk::kernel_cons(g, coins);
      const qwalk::ShiftMatrix s = qwalk::flipflop_shift(g);
      const qwalk::BoundaryOperator k = qwalk::build_boundary(g, cons);
      const qwalk::Discriminant t = qwalk::build_discriminant(g, k, s);
      const qwalk::EvolutionMatrix u =
          qwalk::evolution(s, qwalk::coin_matrix(g, coins));
      const double dev = qwalk::charpoly_identity_check(
          u, t, coins.kappa, coins.kappa_prime,
          qwalk::charpoly_sample_points(samples, seed));
      std::printf("seed %llu: max relative deviation over %d samples: %.3e\n",
                  seed, samples, dev);
      return dev <= 1e-8 ? kExitOk : kExitMismatch;
    } catch (const std::invalid_argument& err) {
      std::cerr << "invalid input: " << err.what() << "\n";
      return kExitInvalid;
    } catch (const qwalk::SpectrumViolation& err) {
      std::cerr << "coin certificate violation: " << err.what() << "\n";
      return kExitInvalid;
    } catch (const qwalk::MultiplicityViolation& err) {
      std::cerr << "coin certificate violation: " << err.what() << "\n";
      return kExitInvalid;
    }
  } catch (const std::invalid_argument& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::out_of_range& err) {
    std::cerr << "invalid input: " << err.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "i/o error: " << err.what() << "\n";
    return kExitIo;
  }
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("QWS_THREADS")) {
    Eigen::setNbThreads(std::max(1, std::atoi(env)));
  }

  CLI::App app{"Spectral toolkit for coined quantum walks on finite graphs"};
  app.require_subcommand(1);

  std::string graph_path, coins_path, out_path, convention = "case_ii",
                                                fault;
  double tol = 1e-8;
  int d = 3, grid = 4, samples = 16;
  unsigned long long seed = 12345;

  auto* analyze = app.add_subcommand(
      "analyze", "Spectral report for a graph + coin specification");
  analyze->add_option("--graph", graph_path, "graph JSON path")->required();
  analyze->add_option("--coins", coins_path, "coin JSON path")->required();
  analyze->add_option("--out", out_path, "report output path (default stdout)");
  analyze->add_option("--tol", tol, "eigenvalue clustering tolerance")
      ->check(CLI::PositiveNumber);

  auto* lattice = app.add_subcommand(
      "lattice", "Momentum-grid band scan of the lattice walk");
  lattice->add_option("--d", d, "lattice dimension (1..4)");
  lattice->add_option("--grid", grid, "samples per axis (1..64)");
  lattice->add_option("--convention", convention, "case_i or case_ii");
  lattice->add_option("--out", out_path, "CSV output path (default stdout)");
  lattice->add_option("--tol", tol, "eigenvalue clustering tolerance")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--fault", fault, "inject a fault (corrupt-K; test only)");

  auto* charpoly = app.add_subcommand(
      "charpoly", "Check the determinant factorization at sample points");
  charpoly->add_option("--graph", graph_path, "graph JSON path")->required();
  charpoly->add_option("--coins", coins_path, "coin JSON path")->required();
  charpoly->add_option("--samples", samples, "number of sample points")
      ->check(CLI::PositiveNumber);
  charpoly->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (analyze->parsed()) return cmd_analyze(graph_path, coins_path, out_path, tol);
  if (lattice->parsed()) return cmd_lattice(d, grid, convention, out_path, tol);
  if (verify->parsed()) return cmd_verify(seed, fault);
  if (charpoly->parsed()) return cmd_charpoly(graph_path, coins_path, samples, seed);
  return kExitInvalid;
}
