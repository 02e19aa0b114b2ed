#include "qwalk/spectral_lift.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

namespace qwalk {

namespace {

// log det via LU pivots; overflow-safe for any matrix size at |lambda| = 2.
Complex log_determinant(const MatrixXcd& m) {
  Eigen::PartialPivLU<MatrixXcd> lu(m);
  Complex acc{0.0, 0.0};
  for (int i = 0; i < m.rows(); ++i) {
    acc += std::log(Complex(lu.matrixLU()(i, i)));
  }
  if (lu.permutationP().determinant() < 0) {
    acc += Complex(0.0, std::numbers::pi);
  }
  return acc;
}

// JacobiSVD throughout: BDCSVD mislabels near-null directions on complex
// inputs of this shape (observed spurious 3e-2 singular values where the
// Gram spectrum shows exact nulls).
MatrixXcd null_space(const MatrixXcd& m, double tol_rank) {
  Eigen::JacobiSVD<MatrixXcd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol_rank * std::max(1.0, scale)) ++rank;
  }
  return svd.matrixV().rightCols(m.cols() - rank);
}

int numeric_rank(const MatrixXcd& m, double tol_rank) {
  Eigen::JacobiSVD<MatrixXcd> svd(m);
  const auto& sv = svd.singularValues();
  const double scale = sv.size() > 0 ? sv(0) : 0.0;
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv(i) > tol_rank * std::max(1.0, scale)) ++rank;
  }
  return rank;
}

}  // namespace

std::vector<TEigenCluster> eig_discriminant(const Discriminant& t,
                                            double tol_cluster) {
  const auto& m = t.matrix;
  if ((m - m.adjoint()).norm() > 1e-10 * std::max(1.0, m.norm())) {
    throw std::invalid_argument("discriminant is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es((m + m.adjoint()) / 2.0);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  std::vector<TEigenCluster> clusters;
  for (int i = 0; i < es.eigenvalues().size(); ++i) {
    const double mu = es.eigenvalues()(i);
    if (!clusters.empty() && mu <= clusters.back().mu + tol_cluster) {
      // extend the running cluster; representative updated afterwards
      auto& c = clusters.back();
      c.vectors.conservativeResize(Eigen::NoChange, c.multiplicity + 1);
      c.vectors.col(c.multiplicity) = es.eigenvectors().col(i);
      c.mu = (c.mu * c.multiplicity + mu) / (c.multiplicity + 1);
      ++c.multiplicity;
    } else {
      TEigenCluster c;
      c.mu = mu;
      c.multiplicity = 1;
      c.vectors = es.eigenvectors().col(i);
      clusters.push_back(std::move(c));
    }
  }
  for (auto& c : clusters) {
    if (std::abs(c.mu - 1.0) <= tol_cluster) c.mu = 1.0;
    if (std::abs(c.mu + 1.0) <= tol_cluster) c.mu = -1.0;
  }
  return clusters;
}

LiftedPair lift_eigenvalue(double mu, Complex kappa, Complex kappa_prime,
                           double tol_boundary) {
  if (std::abs(mu) > 1.0 + tol_boundary) {
    throw std::domain_error("discriminant eigenvalue " + std::to_string(mu) +
                            " lies outside [-1, 1]");
  }
  mu = std::clamp(mu, -1.0, 1.0);
  LiftedPair out;
  out.mu = mu;
  if (std::abs(mu - 1.0) <= tol_boundary) {
    out.kind = LiftKind::BoundaryPlus;
    out.lambdas = {kappa};
  } else if (std::abs(mu + 1.0) <= tol_boundary) {
    out.kind = LiftKind::BoundaryMinus;
    out.lambdas = {-kappa};
  } else {
    out.kind = LiftKind::Interior;
    const Complex c = kappa - kappa_prime;
    const Complex disc = std::sqrt(c * c * mu * mu + 4.0 * kappa * kappa_prime);
    Complex l1 = (c * mu + disc) / 2.0;
    Complex l2 = (c * mu - disc) / 2.0;
    if (std::arg(l1) > std::arg(l2)) std::swap(l1, l2);
    out.lambdas = {l1, l2};
  }
  return out;
}

VectorXcd lift_eigenvector(double mu, const VectorXcd& g_vec, Complex lambda,
                           const BoundaryOperator& k, const ShiftMatrix& s,
                           Complex kappa, Complex kappa_prime) {
  const Complex quad =
      lambda * lambda - (kappa - kappa_prime) * mu * lambda - kappa * kappa_prime;
  if (std::abs(quad) > 1e-8) {
    throw std::invalid_argument("(mu, lambda) do not satisfy the lift equation");
  }
  if (g_vec.size() != k.matrix.cols()) {
    throw std::invalid_argument("eigenvector does not match the boundary operator");
  }
  const bool boundary = std::abs(std::abs(mu) - 1.0) <= 1e-8;
  const VectorXcd kg = k.matrix * g_vec;
  VectorXcd psi;
  if (boundary && std::abs(kappa + kappa_prime) <= 1e-12) {
    psi = kg;
  } else {
    psi = kg + (lambda / kappa_prime) * (s.matrix * kg);
  }
  const double norm = psi.norm();
  if (norm <= 1e-10 * g_vec.norm()) {
    throw std::runtime_error("lifted eigenvector vanished (mu = " +
                             std::to_string(mu) + ")");
  }
  return psi / norm;
}

std::pair<MatrixXcd, MatrixXcd> residual_eigenspace(const BoundaryOperator& k,
                                                    const ShiftMatrix& s,
                                                    double tol_rank) {
  if (!s.is_involution()) {
    throw std::invalid_argument("residual analysis needs an involutive shift");
  }
  const int m = static_cast<int>(s.matrix.rows());
  // The involution swaps arc pairs with a phase; its +-1 eigenspaces have
  // one orthonormal basis vector per pair: (delta_a -+ conj(s_{abar,a})
  // delta_abar)/sqrt(2). Restricting K^* to those frames shrinks the null
  // space problem from the arc space to the pair space.
  MatrixXcd plus_frame = MatrixXcd::Zero(m, m / 2);
  MatrixXcd minus_frame = MatrixXcd::Zero(m, m / 2);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  int pair = 0;
  for (int a = 0; a < m; ++a) {
    int abar = 0;
    for (int r = 0; r < m; ++r) {
      if (std::abs(s.matrix(r, a)) > 0.5) {
        abar = r;
        break;
      }
    }
    if (abar <= a) continue;  // one frame column per pair
    const Complex phase = std::conj(s.matrix(abar, a));
    plus_frame(a, pair) = inv_sqrt2;
    plus_frame(abar, pair) = phase * inv_sqrt2;
    minus_frame(a, pair) = inv_sqrt2;
    minus_frame(abar, pair) = -phase * inv_sqrt2;
    ++pair;
  }
  MatrixXcd plus =
      plus_frame * null_space(k.matrix.adjoint() * plus_frame, tol_rank);
  MatrixXcd minus =
      minus_frame * null_space(k.matrix.adjoint() * minus_frame, tol_rank);
  return {std::move(plus), std::move(minus)};
}

std::vector<Complex> charpoly_sample_points(int count,
                                            unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) out.push_back(std::polar(2.0, angle(rng)));
  return out;
}

double charpoly_identity_check(const EvolutionMatrix& u, const Discriminant& t,
                               Complex kappa, Complex kappa_prime,
                               const std::vector<Complex>& samples) {
  const int two_m = static_cast<int>(u.matrix.rows());
  const int q = static_cast<int>(t.matrix.rows());
  const int n_edges = two_m / 2;
  const int exponent = n_edges - q;
  const MatrixXcd id_u = MatrixXcd::Identity(two_m, two_m);
  const MatrixXcd id_t = MatrixXcd::Identity(q, q);
  double worst = 0.0;
  for (Complex lambda : samples) {
    // Both sides compared in log space: the relative deviation is
    // |exp(log lhs - log rhs) - 1|, stable at any degree.
    for (int attempt = 0;; ++attempt) {
      const Complex edge_factor = lambda * lambda - kappa_prime * kappa_prime;
      if (std::abs(edge_factor) < 1e-9 && attempt < 8) {
        lambda *= std::polar(1.0, 1e-3);  // singular sample; rotate off it
        continue;
      }
      const Complex log_rhs =
          static_cast<double>(exponent) * std::log(edge_factor) +
          log_determinant((lambda * lambda - kappa * kappa_prime) * id_t -
                          (kappa - kappa_prime) * lambda * t.matrix);
      const Complex log_lhs = log_determinant(lambda * id_u - u.matrix);
      worst = std::max(worst, std::abs(std::exp(log_lhs - log_rhs) - 1.0));
      break;
    }
  }
  return worst;
}

std::vector<Complex> SpectrumReport::predicted_spectrum() const {
  std::vector<Complex> out;
  out.reserve(2 * n_edges);
  for (const auto& l : lifted) {
    for (const Complex& lam : l.pair.lambdas) {
      out.insert(out.end(), l.multiplicity, lam);
    }
  }
  out.insert(out.end(), residual_plus, kappa_prime);
  out.insert(out.end(), residual_minus, -kappa_prime);
  return out;
}

SpectrumReport full_report(const Graph& g, const CoinAssignment& coins,
                           const ShiftMatrix& s, const ReportOptions& opts) {
  return full_report(g, coins, s, kernel_cons(g, coins, opts.tol_cluster),
                     opts);
}

SpectrumReport full_report(const Graph& g, const CoinAssignment& coins,
                           const ShiftMatrix& s, const KernelBasis& cons,
                           const ReportOptions& opts) {
  if (!s.is_involution()) {
    throw std::invalid_argument(
        "full_report needs an involutive shift; rewrite general shifts via "
        "to_flipflop_coin first");
  }
  certify_two_point_spectrum(g, coins, opts.tol_cluster);

  SpectrumReport report;
  report.kappa = coins.kappa;
  report.kappa_prime = coins.kappa_prime;
  report.multiplicity = coins.multiplicity;
  report.n_edges = g.num_edges();
  report.n_vertices = g.num_vertices();

  const BoundaryOperator k = build_boundary(g, cons);
  const Discriminant t = build_discriminant(g, k, s);
  const MatrixXcd c = coin_matrix(g, coins);
  // The supplied basis must consist of kappa eigenvectors: C K = kappa K.
  const double basis_residual = (c * k.matrix - coins.kappa * k.matrix).norm();
  if (basis_residual > 1e-8) {
    throw std::invalid_argument(
        "basis is not a kappa eigenbasis of the coins (residual " +
        std::to_string(basis_residual) + ")");
  }
  const EvolutionMatrix u = evolution(s, c);

  report.t_spectrum = eig_discriminant(t, opts.tol_cluster);

  const int q = coins.multiplicity * g.num_vertices();
  for (const auto& cluster : report.t_spectrum) {
    LiftedEigenspace lifted;
    lifted.pair = lift_eigenvalue(cluster.mu, coins.kappa, coins.kappa_prime,
                                  opts.tol_boundary);
    lifted.multiplicity = cluster.multiplicity;
    if (lifted.pair.kind == LiftKind::BoundaryPlus) {
      report.ledger.m_plus = cluster.multiplicity;
    } else if (lifted.pair.kind == LiftKind::BoundaryMinus) {
      report.ledger.m_minus = cluster.multiplicity;
    }
    for (const Complex& lambda : lifted.pair.lambdas) {
      MatrixXcd psi(g.num_arcs(), cluster.multiplicity);
      for (int j = 0; j < cluster.multiplicity; ++j) {
        psi.col(j) = lift_eigenvector(cluster.mu, cluster.vectors.col(j),
                                      lambda, k, s, coins.kappa,
                                      coins.kappa_prime);
        const double res = (u.matrix * psi.col(j) - lambda * psi.col(j)).norm();
        lifted.max_residual = std::max(lifted.max_residual, res);
      }
      if (numeric_rank(psi, 1e-8) != cluster.multiplicity) {
        throw std::runtime_error(
            "lifted eigenvector family is rank-deficient at mu = " +
            std::to_string(cluster.mu));
      }
      lifted.vectors.push_back(std::move(psi));
    }
    report.max_lift_residual =
        std::max(report.max_lift_residual, lifted.max_residual);
    report.lifted.push_back(std::move(lifted));
  }

  // Dimension ledger, with the numeric rank of [K  SK] as a cross-check;
  // the rank comes from the Gram spectrum (eigenvalues 1 +- mu), counted
  // above tol_rank^2 to match the singular-value threshold.
  const int boundary_total = report.ledger.m_plus + report.ledger.m_minus;
  report.ledger.dim_inherited = 2 * q - boundary_total;
  report.ledger.dim_overlap = boundary_total;
  report.ledger.dim_residual = 2 * g.num_edges() - report.ledger.dim_inherited;
  MatrixXcd span_gram(2 * q, 2 * q);
  const MatrixXcd sk = s.matrix * k.matrix;
  span_gram.topLeftCorner(q, q) = k.matrix.adjoint() * k.matrix;
  span_gram.topRightCorner(q, q) = k.matrix.adjoint() * sk;
  span_gram.bottomLeftCorner(q, q) = sk.adjoint() * k.matrix;
  span_gram.bottomRightCorner(q, q) = sk.adjoint() * sk;
  Eigen::SelfAdjointEigenSolver<MatrixXcd> gram_eigs(span_gram);
  int span_rank = 0;
  for (int i = 0; i < 2 * q; ++i) {
    if (gram_eigs.eigenvalues()(i) > opts.tol_rank * opts.tol_rank) ++span_rank;
  }
  if (span_rank != report.ledger.dim_inherited) {
    throw std::runtime_error("inherited subspace rank disagrees with the ledger");
  }

  const auto [plus_basis, minus_basis] = residual_eigenspace(k, s, opts.tol_rank);
  report.residual_plus = static_cast<int>(plus_basis.cols());
  report.residual_minus = static_cast<int>(minus_basis.cols());
  const int expect_plus =
      g.num_edges() - q + report.ledger.m_minus;
  const int expect_minus =
      g.num_edges() - q + report.ledger.m_plus;
  if (report.residual_plus != expect_plus ||
      report.residual_minus != expect_minus) {
    throw std::runtime_error(
        "residual eigenspace dimensions disagree with the ledger: got (" +
        std::to_string(report.residual_plus) + ", " +
        std::to_string(report.residual_minus) + "), expected (" +
        std::to_string(expect_plus) + ", " + std::to_string(expect_minus) +
        ")");
  }

  std::vector<Complex> oracle;
  oracle.reserve(g.num_arcs());
  for (const auto& cl : dense_spectrum(u.matrix, opts.tol_cluster, opts.dense_cap)) {
    oracle.insert(oracle.end(), cl.multiplicity, cl.value);
  }
  report.oracle_delta =
      spectrum_multiset_distance(report.predicted_spectrum(), std::move(oracle));
  return report;
}

}  // namespace qwalk
