#include "qwalk/coins.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

namespace qwalk {

namespace {

void check_unit_certificate(const CoinAssignment& coins) {
  if (std::abs(std::abs(coins.kappa) - 1.0) > 1e-12 ||
      std::abs(std::abs(coins.kappa_prime) - 1.0) > 1e-12) {
    throw std::invalid_argument("kappa and kappa' must be unit modulus");
  }
  if (std::abs(coins.kappa - coins.kappa_prime) < 1e-12) {
    throw std::invalid_argument("kappa == kappa' gives a trivial walk");
  }
  if (coins.multiplicity < 1) {
    throw std::invalid_argument("multiplicity p must be at least 1");
  }
}

void check_shapes(const Graph& g, const CoinAssignment& coins) {
  if (static_cast<int>(coins.coin.size()) != g.num_vertices()) {
    throw std::invalid_argument("coin count does not match vertex count");
  }
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& c = coins.coin[u];
    if (c.rows() != g.degree(u) || c.cols() != g.degree(u)) {
      throw std::invalid_argument("coin at vertex " + std::to_string(u) +
                                  " does not match its degree");
    }
  }
}

}  // namespace

MatrixXcd grover_matrix(int n) {
  if (n < 1) throw std::invalid_argument("grover_matrix needs n >= 1");
  MatrixXcd m = MatrixXcd::Constant(n, n, Complex(2.0 / n, 0.0));
  m -= MatrixXcd::Identity(n, n);
  return m;
}

MatrixXcd moving_shift_coin(int d) {
  if (d < 1) throw std::invalid_argument("moving_shift_coin needs d >= 1");
  const MatrixXcd gr = grover_matrix(2 * d);
  MatrixXcd out(2 * d, 2 * d);
  for (int j = 0; j < d; ++j) {
    out.row(2 * j) = gr.row(2 * j + 1);
    out.row(2 * j + 1) = gr.row(2 * j);
  }
  return out;
}

CoinAssignment grover_coins(const Graph& g) {
  CoinAssignment coins;
  coins.coin.reserve(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) {
    coins.coin.push_back(grover_matrix(g.degree(u)));
  }
  coins.kappa = Complex(1.0, 0.0);
  coins.kappa_prime = Complex(-1.0, 0.0);
  coins.multiplicity = 1;
  return coins;
}

CoinAssignment moving_shift_coins(const Graph& g, CoinConvention conv) {
  CoinAssignment coins;
  coins.coin.reserve(g.num_vertices());
  int d = -1;
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) % 2 != 0) {
      throw std::invalid_argument("moving_shift_coins needs even degrees");
    }
    if (d < 0) d = g.degree(u) / 2;
    if (g.degree(u) / 2 != d) {
      throw std::invalid_argument("moving_shift_coins needs a regular graph");
    }
    coins.coin.push_back(moving_shift_coin(d));
  }
  if (conv == CoinConvention::CaseI) {
    if (d < 2) {
      throw std::invalid_argument(
          "CaseI needs d >= 2: the -1 eigenspace of sigma*Gr(2) is empty");
    }
    coins.kappa = Complex(-1.0, 0.0);
    coins.kappa_prime = Complex(1.0, 0.0);
    coins.multiplicity = d - 1;
  } else {
    coins.kappa = Complex(1.0, 0.0);
    coins.kappa_prime = Complex(-1.0, 0.0);
    coins.multiplicity = d + 1;
  }
  return coins;
}

KernelBasis lattice_kernel_basis(const Graph& g, CoinConvention conv) {
  int d = -1;
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (g.degree(u) % 2 != 0 || (d >= 0 && g.degree(u) / 2 != d)) {
      throw std::invalid_argument("lattice_kernel_basis needs a 2d-regular graph");
    }
    if (d < 0) d = g.degree(u) / 2;
  }
  const double inv_sqrt = 1.0 / std::sqrt(2.0 * d);
  MatrixXcd b;
  if (conv == CoinConvention::CaseI) {
    if (d < 2) throw std::invalid_argument("CaseI needs d >= 2");
    b.resize(2 * d, d - 1);
    const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / d);
    for (int i = 1; i <= d - 1; ++i) {
      for (int j = 0; j < d; ++j) {
        const Complex val = inv_sqrt * std::pow(w, i * j);
        b(2 * j, i - 1) = val;
        b(2 * j + 1, i - 1) = val;
      }
    }
  } else {
    b = MatrixXcd::Zero(2 * d, d + 1);
    b.col(0).setConstant(Complex(inv_sqrt, 0.0));
    const double r = 1.0 / std::sqrt(2.0);
    for (int j = 0; j < d; ++j) {
      b(2 * j, j + 1) = Complex(r, 0.0);
      b(2 * j + 1, j + 1) = Complex(-r, 0.0);
    }
  }
  KernelBasis cons;
  cons.multiplicity = static_cast<int>(b.cols());
  cons.basis.assign(g.num_vertices(), b);
  return cons;
}

std::vector<std::pair<int, int>> certify_two_point_spectrum(
    const Graph& g, const CoinAssignment& coins, double tol_cluster) {
  check_unit_certificate(coins);
  check_shapes(g, coins);
  const int p = coins.multiplicity;
  if (p > g.min_degree()) {
    throw std::invalid_argument("multiplicity p exceeds the minimum degree");
  }
  std::vector<std::pair<int, int>> dims;
  dims.reserve(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& c = coins.coin[u];
    const double unitary_err =
        (c.adjoint() * c - MatrixXcd::Identity(c.rows(), c.cols())).norm();
    if (unitary_err > 1e-10) {
      throw std::invalid_argument("coin at vertex " + std::to_string(u) +
                                  " is not unitary (residual " +
                                  std::to_string(unitary_err) + ")");
    }
    Eigen::ComplexEigenSolver<MatrixXcd> es(c, /*computeEigenvectors=*/false);
    int n_kappa = 0, n_prime = 0;
    for (int i = 0; i < c.rows(); ++i) {
      const Complex lam = es.eigenvalues()(i);
      if (std::abs(lam - coins.kappa) <= tol_cluster) {
        ++n_kappa;
      } else if (std::abs(lam - coins.kappa_prime) <= tol_cluster) {
        ++n_prime;
      } else {
        throw SpectrumViolation("vertex " + std::to_string(u) +
                                ": eigenvalue (" + std::to_string(lam.real()) +
                                ", " + std::to_string(lam.imag()) +
                                ") lies off both declared values");
      }
    }
    if (n_kappa != p) {
      throw MultiplicityViolation(
          "vertex " + std::to_string(u) + ": kappa eigenspace has dimension " +
          std::to_string(n_kappa) + ", declared " + std::to_string(p));
    }
    dims.emplace_back(n_kappa, n_prime);
  }
  return dims;
}

KernelBasis kernel_cons(const Graph& g, const CoinAssignment& coins,
                        double tol_cluster) {
  certify_two_point_spectrum(g, coins, tol_cluster);
  const int p = coins.multiplicity;
  KernelBasis cons;
  cons.multiplicity = p;
  cons.basis.reserve(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& c = coins.coin[u];
    const int n = static_cast<int>(c.rows());
    // Hermitian eigenprojector onto the kappa cluster:
    // C = (kappa - kappa') P + kappa' I.
    MatrixXcd proj = (c - coins.kappa_prime * MatrixXcd::Identity(n, n)) /
                     (coins.kappa - coins.kappa_prime);
    proj = (proj + proj.adjoint()).eval() / 2.0;
    Eigen::SelfAdjointEigenSolver<MatrixXcd> es(proj);
    MatrixXcd b = es.eigenvectors().rightCols(p);
    // Tighten orthonormality (cluster vectors are orthonormal only to
    // solver precision).
    Eigen::HouseholderQR<MatrixXcd> qr(b);
    b = qr.householderQ() * MatrixXcd::Identity(n, p);
    // Phase-fix on the first nonzero component, then order by pivot index.
    std::vector<int> pivot(p, n);
    for (int j = 0; j < p; ++j) {
      for (int i = 0; i < n; ++i) {
        if (std::abs(b(i, j)) > 1e-8) {
          b.col(j) *= std::conj(b(i, j)) / std::abs(b(i, j));
          pivot[j] = i;
          break;
        }
      }
    }
    std::vector<int> order(p);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int bcol) { return pivot[a] < pivot[bcol]; });
    MatrixXcd sorted(n, p);
    for (int j = 0; j < p; ++j) sorted.col(j) = b.col(order[j]);
    cons.basis.push_back(std::move(sorted));
  }
  return cons;
}

CoinAssignment to_flipflop_coin(const Graph& g, const ArcPermutation& pi,
                                const CoinAssignment& coins) {
  validate_shift_permutation(g, pi);
  check_shapes(g, coins);
  CoinAssignment out = coins;
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& arcs = g.arcs_into(u);
    const int dd = g.degree(u);
    MatrixXcd q = MatrixXcd::Zero(dd, dd);
    for (int s = 0; s < dd; ++s) {
      // slot(a) -> slot(inverse(pi(a))); both arcs end at u.
      q(g.coin_slot(g.inverse(pi(arcs[s]))), s) = 1.0;
    }
    out.coin[u] = q * coins.coin[u];
  }
  return out;
}

}  // namespace qwalk
