#include "qwalk/walk_operator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

namespace qwalk {

ShiftMatrix flipflop_shift(const Graph& g) {
  const int m = g.num_arcs();
  MatrixXcd s = MatrixXcd::Zero(m, m);
  for (int a = 0; a < m; ++a) s(g.inverse(a), a) = 1.0;
  return {std::move(s), ShiftKind::FlipFlop};
}

ShiftMatrix permutation_shift(const Graph& g, const ArcPermutation& pi) {
  validate_shift_permutation(g, pi);
  const int m = g.num_arcs();
  MatrixXcd s = MatrixXcd::Zero(m, m);
  for (int a = 0; a < m; ++a) s(pi(a), a) = 1.0;
  return {std::move(s), ShiftKind::Permutation};
}

ShiftMatrix twisted_shift(const Graph& g, const OneForm& theta) {
  const int m = g.num_arcs();
  if (static_cast<int>(theta.theta.size()) != m) {
    throw std::invalid_argument("one-form size does not match arc count");
  }
  for (int a = 0; a < m; ++a) {
    if (std::abs(theta.theta[a] + theta.theta[g.inverse(a)]) > 1e-12) {
      throw std::invalid_argument("one-form is not antisymmetric at arc " +
                                  std::to_string(a));
    }
  }
  MatrixXcd s = MatrixXcd::Zero(m, m);
  for (int a = 0; a < m; ++a) {
    s(g.inverse(a), a) = std::polar(1.0, theta.theta[g.inverse(a)]);
  }
  return {std::move(s), ShiftKind::Twisted};
}

MatrixXcd coin_matrix(const Graph& g, const CoinAssignment& coins) {
  if (static_cast<int>(coins.coin.size()) != g.num_vertices()) {
    throw std::invalid_argument("coin count does not match vertex count");
  }
  const int m = g.num_arcs();
  MatrixXcd c = MatrixXcd::Zero(m, m);
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& arcs = g.arcs_into(u);
    const auto& cu = coins.coin[u];
    if (cu.rows() != g.degree(u) || cu.cols() != g.degree(u)) {
      throw std::invalid_argument("coin at vertex " + std::to_string(u) +
                                  " does not match its degree");
    }
    for (int i = 0; i < g.degree(u); ++i) {
      for (int j = 0; j < g.degree(u); ++j) {
        c(arcs[i], arcs[j]) = cu(i, j);
      }
    }
  }
  return c;
}

EvolutionMatrix evolution(const ShiftMatrix& s, const MatrixXcd& coin) {
  if (s.matrix.rows() != coin.rows() || s.matrix.cols() != coin.cols()) {
    throw std::invalid_argument("shift and coin dimensions do not match");
  }
  MatrixXcd u = s.matrix * coin;
  const double err =
      (u.adjoint() * u - MatrixXcd::Identity(u.rows(), u.cols())).norm();
  if (err > 1e-10) {
    throw std::invalid_argument("evolution operator is not unitary (residual " +
                                std::to_string(err) + ")");
  }
  const char* tag = s.kind == ShiftKind::FlipFlop      ? "flipflop"
                    : s.kind == ShiftKind::Permutation ? "permutation"
                                                       : "twisted";
  std::string provenance =
      std::string(tag) + " shift on " + std::to_string(u.rows()) + " arcs";
  return {std::move(u), s.kind, std::move(provenance)};
}

double angular_distance(Complex a, Complex b) {
  const double d = std::arg(a) - std::arg(b);
  return std::abs(std::remainder(d, 2.0 * std::numbers::pi));
}

std::vector<SpectrumCluster> dense_spectrum(const MatrixXcd& u,
                                            double tol_cluster,
                                            int dimension_cap) {
  const int n = static_cast<int>(u.rows());
  if (n != u.cols()) throw std::invalid_argument("matrix must be square");
  if (n > dimension_cap) {
    throw std::invalid_argument("dimension " + std::to_string(n) +
                                " exceeds the dense cap " +
                                std::to_string(dimension_cap));
  }
  Eigen::ComplexEigenSolver<MatrixXcd> es(u, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("dense eigendecomposition failed");
  }
  for (int i = 0; i < n; ++i) {
    if (std::abs(std::abs(es.eigenvalues()(i)) - 1.0) > 1e-9) {
      throw std::invalid_argument("eigenvalue off the unit circle; input not unitary");
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::arg(es.eigenvalues()(a)) < std::arg(es.eigenvalues()(b));
  });

  std::vector<std::vector<int>> groups;
  for (int idx : order) {
    if (!groups.empty() &&
        angular_distance(es.eigenvalues()(groups.back().back()),
                         es.eigenvalues()(idx)) <= tol_cluster) {
      groups.back().push_back(idx);
    } else {
      groups.push_back({idx});
    }
  }
  // The circle wraps: the first and last group may be one cluster.
  if (groups.size() > 1 &&
      angular_distance(es.eigenvalues()(groups.back().back()),
                       es.eigenvalues()(groups.front().front())) <=
          tol_cluster) {
    auto& first = groups.front();
    first.insert(first.begin(), groups.back().begin(), groups.back().end());
    groups.pop_back();
  }

  std::vector<SpectrumCluster> out;
  out.reserve(groups.size());
  for (const auto& idxs : groups) {
    SpectrumCluster c;
    c.multiplicity = static_cast<int>(idxs.size());
    Complex mean{0.0, 0.0};
    for (int i : idxs) mean += es.eigenvalues()(i);
    c.value = mean / std::abs(mean);
    c.vectors.resize(n, c.multiplicity);
    for (int j = 0; j < c.multiplicity; ++j) {
      c.vectors.col(j) = es.eigenvectors().col(idxs[j]);
      c.diameter = std::max(
          c.diameter, angular_distance(es.eigenvalues()(idxs[j]), c.value) * 2.0);
    }
    out.push_back(std::move(c));
  }
  return out;
}

double spectrum_multiset_distance(const std::vector<Complex>& a,
                                  std::vector<Complex> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("multiset sizes differ: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  }
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = 0;
    double best_d = angular_distance(x, b[0]);
    for (std::size_t i = 1; i < b.size(); ++i) {
      const double d = angular_distance(x, b[i]);
      if (d < best_d) {
        best_d = d;
        best = i;
      }
    }
    worst = std::max(worst, best_d);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

}  // namespace qwalk
