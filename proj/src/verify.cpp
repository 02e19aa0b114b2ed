#include "qwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "qwalk/coins.hpp"
#include "qwalk/discriminant.hpp"
#include "qwalk/fourier_lattice.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/random_instances.hpp"
#include "qwalk/spectral_lift.hpp"
#include "qwalk/walk_operator.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Running worst case with the name of the instance that produced it.
struct Worst {
  double value = 0.0;
  std::string where;
  void add(double v, const std::string& name) {
    if (v >= value) {
      value = v;
      where = name;
    }
  }
};

struct Violations {
  int count = 0;
  std::string where;
  void add(bool bad, const std::string& name) {
    if (bad) {
      ++count;
      if (where.empty()) where = name;
    }
  }
};

CheckResult residual_check(const std::string& name, const Worst& w,
                           double threshold) {
  return {name, w.value <= threshold, w.value, threshold,
          w.where.empty() ? "" : "worst at " + w.where};
}

CheckResult count_check(const std::string& name, const Violations& v) {
  return {name, v.count == 0, static_cast<double>(v.count), 0.0,
          v.where.empty() ? "" : "first at " + v.where};
}

Momentum random_momentum(int d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, kTwoPi);
  std::vector<double> k(d);
  for (double& kj : k) kj = angle(rng);
  return Momentum(std::move(k));
}

// Monic polynomial with the given roots, highest coefficient first.
std::vector<double> poly_from_roots(const VectorXd& roots) {
  std::vector<double> coeffs{1.0};
  for (int i = 0; i < roots.size(); ++i) {
    coeffs.push_back(0.0);
    for (std::size_t j = coeffs.size() - 1; j >= 1; --j) {
      coeffs[j] -= roots(i) * coeffs[j - 1];
    }
  }
  return coeffs;
}

}  // namespace

bool VerifySummary::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerifySummary::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

VerifySummary run_verification(const SuiteConfig& config) {
  std::mt19937_64 rng(config.seed);
  VerifySummary summary;

  // ---- instance roster: boundary/discriminant/coin identities, the
  // determinant factorization, oracle equivalence, dimension ledger ----
  Worst isometry, block_formula, coin_identity, determinant, oracle,
      eigvec_residual;
  Violations exclusion, ledger;
  std::string pipeline_error;

  const auto roster = verification_roster(config.seed + 1);
  for (const auto& inst : roster) {
    const KernelBasis cons = kernel_cons(inst.graph, inst.coins);
    BoundaryOperator k = build_boundary(inst.graph, cons);
    if (config.fault == "corrupt-K") k.matrix(0, 0) += 0.5;

    const auto q = k.matrix.cols();
    isometry.add((k.matrix.adjoint() * k.matrix -
                  MatrixXcd::Identity(q, q))
                     .norm(),
                 inst.name);

    // Arc-sum blocks from the eigenbasis weights, against K*SK.
    MatrixXcd blocks = MatrixXcd::Zero(q, q);
    const int p = cons.multiplicity;
    for (int a = 0; a < inst.graph.num_arcs(); ++a) {
      const int abar = inst.graph.inverse(a);
      blocks.block(inst.graph.terminus(a) * p, inst.graph.origin(a) * p, p, p) +=
          inst.shift.matrix(a, abar) * matrix_weight(inst.graph, cons, a);
    }
    block_formula.add(
        (k.matrix.adjoint() * inst.shift.matrix * k.matrix - blocks).norm(),
        inst.name);

    coin_identity.add(verify_coin_identity(coin_matrix(inst.graph, inst.coins),
                                           k, inst.coins.kappa,
                                           inst.coins.kappa_prime),
                      inst.name);

    try {
      const BoundaryOperator k_clean = build_boundary(inst.graph, cons);
      const Discriminant t = build_discriminant(inst.graph, k_clean, inst.shift);
      const EvolutionMatrix u =
          evolution(inst.shift, coin_matrix(inst.graph, inst.coins));
      determinant.add(
          charpoly_identity_check(
              u, t, inst.coins.kappa, inst.coins.kappa_prime,
              charpoly_sample_points(config.charpoly_samples, rng())),
          inst.name);

      const SpectrumReport report =
          full_report(inst.graph, inst.coins, inst.shift, cons);
      oracle.add(report.oracle_delta, inst.name);
      eigvec_residual.add(report.max_lift_residual, inst.name);

      if (std::abs(inst.coins.kappa + inst.coins.kappa_prime) > 1e-12) {
        for (const auto& l : report.lifted) {
          for (const Complex& lam : l.pair.lambdas) {
            exclusion.add(angular_distance(lam, report.kappa_prime) <= 1e-8 ||
                              angular_distance(lam, -report.kappa_prime) <= 1e-8,
                          inst.name);
          }
        }
      }

      const auto& led = report.ledger;
      const bool ints_ok =
          led.dim_inherited == 2 * static_cast<int>(q) - led.dim_overlap &&
          led.dim_overlap == led.m_plus + led.m_minus &&
          report.residual_plus ==
              inst.graph.num_edges() - static_cast<int>(q) + led.m_minus &&
          report.residual_minus ==
              inst.graph.num_edges() - static_cast<int>(q) + led.m_plus &&
          led.dim_inherited + report.residual_plus + report.residual_minus ==
              2 * inst.graph.num_edges();
      ledger.add(!ints_ok, inst.name);
    } catch (const std::exception& err) {
      ledger.add(true, inst.name + " (" + err.what() + ")");
      if (pipeline_error.empty()) pipeline_error = err.what();
    }
  }
  summary.checks.push_back(residual_check("boundary-isometry", isometry, 1e-10));
  summary.checks.push_back(
      residual_check("discriminant-block-formula", block_formula, 1e-10));
  summary.checks.push_back(
      residual_check("coin-reconstruction", coin_identity, 1e-10));
  summary.checks.push_back(
      residual_check("determinant-factorization", determinant, 1e-8));
  summary.checks.push_back(residual_check("spectrum-oracle", oracle, 1e-7));
  summary.checks.push_back(
      residual_check("eigenvector-residual", eigvec_residual, 1e-9));
  summary.checks.push_back(count_check("excluded-values", exclusion));
  summary.checks.push_back(count_check("dimension-ledger", ledger));

  // ---- general-shift rewrite ----
  {
    Worst rewrite;
    for (int trial = 0; trial < 20; ++trial) {
      Graph g = trial % 3 == 0   ? cycle_graph(4)
                : trial % 3 == 1 ? complete_graph(4)
                                 : random_connected_graph(6, 4, rng);
      CoinAssignment coins;
      coins.coin.reserve(g.num_vertices());
      for (int u = 0; u < g.num_vertices(); ++u) {
        coins.coin.push_back(random_unitary(g.degree(u), rng));
      }
      const ArcPermutation pi = random_shift_permutation(g, rng);
      const MatrixXcd c = coin_matrix(g, coins);
      const MatrixXcd lhs = permutation_shift(g, pi).matrix * c;
      const MatrixXcd rhs = flipflop_shift(g).matrix *
                            coin_matrix(g, to_flipflop_coin(g, pi, coins));
      rewrite.add((lhs - rhs).norm(), "trial " + std::to_string(trial));
    }
    summary.checks.push_back(residual_check("flipflop-rewrite", rewrite, 1e-12));
  }

  // ---- swap-Grover coin clusters, d = 1..6 ----
  {
    Worst spread;
    Violations counts;
    for (int d = 1; d <= 6; ++d) {
      Eigen::ComplexEigenSolver<MatrixXcd> es(moving_shift_coin(d), false);
      int plus = 0, minus = 0;
      for (int i = 0; i < 2 * d; ++i) {
        const Complex lam = es.eigenvalues()(i);
        const double to_plus = std::abs(lam - 1.0);
        const double to_minus = std::abs(lam + 1.0);
        spread.add(std::min(to_plus, to_minus), "d=" + std::to_string(d));
        (to_plus <= to_minus ? plus : minus) += 1;
      }
      counts.add(plus != d + 1 || minus != d - 1, "d=" + std::to_string(d));
    }
    summary.checks.push_back(
        residual_check("swap-grover-clusters", spread, 1e-10));
    summary.checks.push_back(count_check("swap-grover-multiplicity", counts));
  }

  // ---- d=3 momentum-space closed forms ----
  {
    Worst quad_roots, lifted_sign;
    for (int trial = 0; trial < config.quadratic_samples; ++trial) {
      const Momentum k = random_momentum(3, rng);
      double g1 = 0.0, g2 = 0.0;
      const double c0 = std::cos(k[0]), c1 = std::cos(k[1]), c2 = std::cos(k[2]);
      g1 = c0 + c1 + c2;
      g2 = c0 * c1 + c1 * c2 + c2 * c0;
      const std::vector<Complex> roots =
          polynomial_roots({1.0, -2.0 / 3.0 * g1, g2 / 3.0});
      std::vector<double> mus;
      for (const Complex& r : roots) mus.push_back(r.real());
      std::sort(mus.begin(), mus.end());

      const MatrixXcd t_hat = discriminant_case_i(3, k);
      Eigen::SelfAdjointEigenSolver<MatrixXcd> es(t_hat);
      for (int i = 0; i < 2; ++i) {
        quad_roots.add(std::abs(mus[i] - es.eigenvalues()(i)), "quadratic");
      }

      // Interior roots lift to -exp(+-i arccos mu), visible in Spec(U(k)).
      Eigen::ComplexEigenSolver<MatrixXcd> eu(fourier_evolution(3, k), false);
      for (double mu : mus) {
        if (std::abs(mu) >= 1.0 - 1e-8) continue;
        const LiftedPair pair = lift_eigenvalue(mu, Complex(-1, 0), Complex(1, 0));
        const Complex expect_up = -std::polar(1.0, std::acos(mu));
        const Complex expect_dn = -std::polar(1.0, -std::acos(mu));
        double best_form = 1e9;
        for (const Complex& lam : pair.lambdas) {
          best_form = std::min(best_form, std::min(std::abs(lam - expect_up),
                                                   std::abs(lam - expect_dn)));
        }
        lifted_sign.add(best_form, "formula");
        for (const Complex& expected : {expect_up, expect_dn}) {
          double nearest = 1e9;
          for (int i = 0; i < 6; ++i) {
            nearest = std::min(nearest, std::abs(eu.eigenvalues()(i) - expected));
          }
          lifted_sign.add(nearest, "spectrum membership");
        }
      }
    }
    summary.checks.push_back(
        residual_check("lattice-quadratic-roots", quad_roots, 1e-10));
    summary.checks.push_back(
        residual_check("lattice-lift-sign", lifted_sign, 1e-9));

    Worst sextic;
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    for (int trial = 0; trial < config.sextic_samples; ++trial) {
      const Momentum k = random_momentum(3, rng);
      const double g1 = std::cos(k[0]) + std::cos(k[1]) + std::cos(k[2]);
      const double g2 = std::cos(k[0]) * std::cos(k[1]) +
                        std::cos(k[1]) * std::cos(k[2]) +
                        std::cos(k[2]) * std::cos(k[0]);
      const MatrixXcd u = fourier_evolution(3, k);
      for (int s = 0; s < 4; ++s) {
        const Complex lam = std::polar(2.0, angle(rng));
        const Complex lhs =
            (lam * MatrixXcd::Identity(6, 6) - u).partialPivLu().determinant();
        const Complex quartic = ((lam + 4.0 / 3.0 * g1) * lam +
                                 (2.0 + 4.0 / 3.0 * g2)) *
                                    lam * lam +
                                (4.0 / 3.0 * g1) * lam + 1.0;
        const Complex rhs = (lam * lam - 1.0) * quartic;
        sextic.add(std::abs(lhs - rhs) / std::abs(rhs), "sextic");
      }
    }
    summary.checks.push_back(residual_check("lattice-sextic", sextic, 1e-9));
  }

  // ---- arrow-matrix characteristic polynomial, d = 2, 3, 4 ----
  {
    Worst eta_gap, at_unit;
    for (int d = 2; d <= 4; ++d) {
      for (int trial = 0; trial < config.arrow_samples; ++trial) {
        const Momentum k = random_momentum(d, rng);
        const EigenPolyCoeffs poly = eigenpoly_coeffs(d, k);
        Eigen::SelfAdjointEigenSolver<MatrixXcd> es(discriminant_case_ii(d, k));
        const std::vector<double> ref = poly_from_roots(es.eigenvalues());
        const std::vector<double> mine = poly.monic_coeffs();
        for (std::size_t i = 0; i < ref.size(); ++i) {
          eta_gap.add(std::abs(ref[i] - mine[i]), "d=" + std::to_string(d));
        }
        double scale = 0.0;
        for (double c : mine) scale += std::abs(c);
        at_unit.add(std::abs(poly.evaluate(1.0)) / std::max(1.0, scale),
                    "P(+1)");
        at_unit.add(std::abs(poly.evaluate(-1.0)) / std::max(1.0, scale),
                    "P(-1)");
      }
    }
    summary.checks.push_back(residual_check("arrow-charpoly", eta_gap, 1e-10));
    summary.checks.push_back(residual_check("unit-roots", at_unit, 1e-10));
  }

  // ---- +-1 multiplicities on a structured grid with k_j in {0, pi} ----
  {
    Violations mult;
    const std::vector<double> axis{0.0, std::numbers::pi, 1.1, 2.3};
    for (int d = 2; d <= 4; ++d) {
      std::vector<int> idx(d, 0);
      while (true) {
        std::vector<double> kv(d);
        for (int j = 0; j < d; ++j) kv[j] = axis[idx[j]];
        const Momentum k(kv);
        const Pm1Multiplicity m = pm1_multiplicity(d, k);
        int at_minus_one = 0, at_plus_one = 0;
        for (int j = 0; j < d; ++j) {
          if (std::abs(std::cos(k[j]) + 1.0) <= 1e-12) ++at_minus_one;
          if (std::abs(std::cos(k[j]) - 1.0) <= 1e-12) ++at_plus_one;
        }
        const bool ok = ((m.m_plus >= 2) == (at_minus_one >= 2)) &&
                        ((m.m_minus >= 2) == (at_plus_one >= 2)) &&
                        (m.exceptional == (at_minus_one >= 2 || at_plus_one >= 2));
        mult.add(!ok, "d=" + std::to_string(d));
        int axis_pos = d - 1;
        while (axis_pos >= 0 &&
               ++idx[axis_pos] == static_cast<int>(axis.size())) {
          idx[axis_pos--] = 0;
        }
        if (axis_pos < 0) break;
      }
    }
    summary.checks.push_back(count_check("unit-root-multiplicity", mult));
  }

  // ---- zero-momentum degeneration ----
  {
    Worst gap, charpoly_gap;
    Violations spectra;
    for (int d = 2; d <= 4; ++d) {
      const Momentum k0(std::vector<double>(d, 0.0));
      gap.add((fourier_evolution(d, k0) - grover_matrix(2 * d))
                  .cwiseAbs()
                  .maxCoeff(),
              "d=" + std::to_string(d));
      int plus = 0, minus = 0;
      Eigen::ComplexEigenSolver<MatrixXcd> es(fourier_evolution(d, k0), false);
      for (int i = 0; i < 2 * d; ++i) {
        const Complex lam = es.eigenvalues()(i);
        (std::abs(lam - 1.0) < std::abs(lam + 1.0) ? plus : minus) += 1;
      }
      spectra.add(plus != 1 || minus != 2 * d - 1, "d=" + std::to_string(d));

      // (x - 1)(x + 1)^d against the eta coefficients.
      VectorXd roots(d + 1);
      roots(0) = 1.0;
      roots.tail(d).setConstant(-1.0);
      const std::vector<double> ref = poly_from_roots(roots);
      const std::vector<double> mine = eigenpoly_coeffs(d, k0).monic_coeffs();
      for (std::size_t i = 0; i < ref.size(); ++i) {
        charpoly_gap.add(std::abs(ref[i] - mine[i]),
                         "charpoly d=" + std::to_string(d));
      }
    }
    summary.checks.push_back(residual_check("zero-momentum-degeneration", gap, 1e-14));
    summary.checks.push_back(
        residual_check("zero-momentum-charpoly", charpoly_gap, 1e-12));
    summary.checks.push_back(count_check("zero-momentum-spectrum", spectra));
  }

  // ---- torus doubly-stochastic sums and conservation ----
  {
    Worst sums, conserved;
    const std::vector<std::pair<int, int>> tori{{2, 4}, {2, 5}, {3, 3}, {3, 4}};
    std::normal_distribution<double> gauss;
    for (const auto& [dim, side] : tori) {
      const Graph g = torus_graph(dim, side);
      const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseI);
      const BoundaryOperator k = build_boundary(g, cons);
      const Discriminant t = build_discriminant(g, k, flipflop_shift(g));
      const auto [row_res, col_res] = stochastic_sums(g, t);
      const std::string name =
          "torus(" + std::to_string(dim) + "," + std::to_string(side) + ")";
      sums.add(std::max(row_res, col_res), name);

      const int p = t.multiplicity;
      for (int trial = 0; trial < config.conservation_vectors; ++trial) {
        VectorXcd f(t.matrix.rows());
        for (int i = 0; i < f.size(); ++i) f(i) = Complex(gauss(rng), gauss(rng));
        const VectorXcd tf = t.matrix * f;
        VectorXcd total = VectorXcd::Zero(p);
        for (int u = 0; u < g.num_vertices(); ++u) {
          total += tf.segment(u * p, p) - f.segment(u * p, p);
        }
        conserved.add(total.cwiseAbs().maxCoeff(), name);
      }
    }
    summary.checks.push_back(
        residual_check("doubly-stochastic-sums", sums, 1e-10));
    summary.checks.push_back(residual_check("conservation", conserved, 1e-10));
  }

  if (!pipeline_error.empty()) {
    for (auto& c : summary.checks) {
      if (c.name == "dimension-ledger" && !c.pass && c.detail.empty()) {
        c.detail = pipeline_error;
      }
    }
  }
  return summary;
}

}  // namespace qwalk
