#include "qwalk/fourier_lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "qwalk/graph.hpp"
#include "qwalk/walk_operator.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string momentum_string(const Momentum& k) {
  std::string s = "(";
  for (int j = 0; j < k.dim(); ++j) {
    if (j) s += ", ";
    s += std::to_string(k[j]);
  }
  return s + ")";
}

// Elementary symmetric functions e_0..e_n of the given values; e_0 = 1.
std::vector<double> elementary_symmetric(const std::vector<double>& values) {
  std::vector<double> e(values.size() + 1, 0.0);
  e[0] = 1.0;
  std::size_t used = 0;
  for (double v : values) {
    ++used;
    for (std::size_t j = used; j >= 1; --j) e[j] += v * e[j - 1];
  }
  return e;
}

double horner(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

std::vector<double> poly_derivative(const std::vector<double>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;  // degree
  if (n <= 0) return {0.0};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = coeffs[i] * (n - i);
  return out;
}

MatrixXcd lattice_block(int d, CoinConvention conv) {
  // Single-vertex block of lattice_kernel_basis; the bouquet has one vertex.
  const Graph bouquet = bouquet_graph(d);
  return lattice_kernel_basis(bouquet, conv).basis[0];
}

}  // namespace

Momentum::Momentum(std::vector<double> components) : k_(std::move(components)) {
  if (k_.empty()) throw std::invalid_argument("momentum needs at least one axis");
  for (double kj : k_) {
    if (!(kj >= 0.0 && kj < kTwoPi)) {
      throw std::domain_error("momentum component " + std::to_string(kj) +
                              " outside [0, 2*pi)");
    }
  }
}

MatrixXcd fourier_shift(int d, const Momentum& k) {
  if (k.dim() != d) throw std::invalid_argument("momentum dimension mismatch");
  MatrixXcd s = MatrixXcd::Zero(2 * d, 2 * d);
  for (int j = 0; j < d; ++j) {
    s(2 * j, 2 * j + 1) = std::polar(1.0, k[j]);    // row (+j), column (-j)
    s(2 * j + 1, 2 * j) = std::polar(1.0, -k[j]);
  }
  return s;
}

MatrixXcd fourier_evolution(int d, const Momentum& k) {
  return fourier_shift(d, k) * moving_shift_coin(d);
}

MatrixXcd discriminant_case_i(int d, const Momentum& k) {
  if (d < 2) {
    throw std::invalid_argument("case-i discriminant is empty for d < 2");
  }
  if (k.dim() != d) throw std::invalid_argument("momentum dimension mismatch");
  const MatrixXcd basis = lattice_block(d, CoinConvention::CaseI);
  MatrixXcd t = basis.adjoint() * fourier_shift(d, k) * basis;

  // Weight-sum route: 2 sum_j cos(k_j) w_j w_j^*, with
  // (w_j)_i = (1/sqrt(2d)) w^{-i(j-1)}, w = exp(2 pi i / d).
  const Complex omega = std::polar(1.0, kTwoPi / d);
  MatrixXcd sum = MatrixXcd::Zero(d - 1, d - 1);
  for (int j = 1; j <= d; ++j) {
    VectorXcd w(d - 1);
    for (int i = 1; i <= d - 1; ++i) {
      w(i - 1) = std::pow(omega, -i * (j - 1)) / std::sqrt(2.0 * d);
    }
    sum += 2.0 * std::cos(k[j - 1]) * w * w.adjoint();
  }
  if ((t - sum).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::runtime_error("case-i discriminant routes disagree at k = " +
                             momentum_string(k));
  }
  return t;
}

MatrixXcd discriminant_case_ii(int d, const Momentum& k) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  if (k.dim() != d) throw std::invalid_argument("momentum dimension mismatch");
  MatrixXcd arrow = MatrixXcd::Zero(d + 1, d + 1);
  double head = 0.0;
  for (int j = 0; j < d; ++j) head += std::cos(k[j]);
  arrow(0, 0) = head / d;
  const double root_d = std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    arrow(0, j + 1) = -kImag / root_d * std::sin(k[j]);
    arrow(j + 1, 0) = kImag / root_d * std::sin(k[j]);
    arrow(j + 1, j + 1) = -std::cos(k[j]);
  }
  const MatrixXcd basis = lattice_block(d, CoinConvention::CaseII);
  const MatrixXcd via_boundary = basis.adjoint() * fourier_shift(d, k) * basis;
  if ((arrow - via_boundary).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::runtime_error("case-ii discriminant routes disagree at k = " +
                             momentum_string(k));
  }
  return arrow;
}

std::vector<double> EigenPolyCoeffs::monic_coeffs() const {
  std::vector<double> coeffs(eta.size() + 1);
  coeffs[0] = 1.0;
  for (int i = 0; i < eta.size(); ++i) coeffs[i + 1] = eta(i);
  return coeffs;
}

double EigenPolyCoeffs::evaluate(double x) const {
  return horner(monic_coeffs(), x);
}

double EigenPolyCoeffs::derivative(double x) const {
  return horner(poly_derivative(monic_coeffs()), x);
}

EigenPolyCoeffs eigenpoly_coeffs(int d, const Momentum& k) {
  if (k.dim() != d) throw std::invalid_argument("momentum dimension mismatch");
  std::vector<double> cosines(d), gamma_set(d + 1);
  double mean = 0.0;
  for (int j = 0; j < d; ++j) {
    cosines[j] = std::cos(k[j]);
    mean += cosines[j];
  }
  gamma_set[0] = -mean / d;
  std::copy(cosines.begin(), cosines.end(), gamma_set.begin() + 1);
  const std::vector<double> gam = elementary_symmetric(gamma_set);

  EigenPolyCoeffs out;
  out.gamma = Eigen::Map<const VectorXd>(gam.data(), gam.size());
  out.eta.resize(d + 1);
  for (int j = 1; j <= d + 1; ++j) {
    double eta_j = gam[j];
    if (j >= 2) {
      for (int s = 0; s < d; ++s) {
        std::vector<double> rest;
        rest.reserve(d - 1);
        for (int l = 0; l < d; ++l) {
          if (l != s) rest.push_back(cosines[l]);
        }
        const std::vector<double> gam_rest = elementary_symmetric(rest);
        const double sin_k = std::sin(k[s]);
        eta_j -= gam_rest[j - 2] * sin_k * sin_k / d;
      }
    }
    out.eta(j - 1) = eta_j;
  }
  return out;
}

std::vector<Complex> polynomial_roots(const std::vector<double>& monic_coeffs) {
  if (monic_coeffs.size() < 2 || monic_coeffs.front() != 1.0) {
    throw std::invalid_argument("expected monic coefficients, highest first");
  }
  const int n = static_cast<int>(monic_coeffs.size()) - 1;
  MatrixXd companion = MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -monic_coeffs[n - i];
  Eigen::EigenSolver<MatrixXd> es(companion, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(n);
  for (int i = 0; i < n; ++i) roots[i] = es.eigenvalues()(i);
  return roots;
}

bool exceptional_momentum(const Momentum& k) {
  int at_plus = 0, at_minus = 0;
  for (int j = 0; j < k.dim(); ++j) {
    const double c = std::cos(k[j]);
    if (std::abs(c - 1.0) <= 1e-12) ++at_plus;
    if (std::abs(c + 1.0) <= 1e-12) ++at_minus;
  }
  return at_plus >= 2 || at_minus >= 2;
}

Pm1Multiplicity pm1_multiplicity(int d, const Momentum& k) {
  const EigenPolyCoeffs poly = eigenpoly_coeffs(d, k);
  Pm1Multiplicity out;
  out.exceptional = exceptional_momentum(k);
  for (int sign : {+1, -1}) {
    std::vector<double> coeffs = poly.monic_coeffs();
    int mult = 0;
    while (mult <= d + 1) {
      double scale = 0.0;
      for (double c : coeffs) scale += std::abs(c);
      if (std::abs(horner(coeffs, sign)) > 1e-9 * std::max(1.0, scale)) break;
      ++mult;
      coeffs = poly_derivative(coeffs);
    }
    (sign > 0 ? out.m_plus : out.m_minus) = mult;
  }
  return out;
}

std::vector<BandScanRow> band_scan(int d, int grid, CoinConvention conv,
                                   const ReportOptions& opts) {
  if (grid < 1) throw std::invalid_argument("grid must be at least 1");
  if (d < 1 || d > 4) throw std::invalid_argument("band scans support d = 1..4");
  const Graph bouquet = bouquet_graph(d);
  const CoinAssignment coins = moving_shift_coins(bouquet, conv);
  const KernelBasis cons = lattice_kernel_basis(bouquet, conv);

  std::vector<BandScanRow> rows;
  std::vector<int> index(d, 0);
  while (true) {
    std::vector<double> kv(d);
    for (int j = 0; j < d; ++j) kv[j] = kTwoPi * index[j] / grid;
    const Momentum k(kv);

    OneForm theta;
    theta.theta.resize(2 * d);
    for (int j = 0; j < d; ++j) {
      theta.theta[2 * j] = kv[j];
      theta.theta[2 * j + 1] = -kv[j];
    }
    const ShiftMatrix shift = twisted_shift(bouquet, theta);

    SpectrumReport report;
    try {
      report = full_report(bouquet, coins, shift, cons, opts);
    } catch (const std::exception& err) {
      throw std::runtime_error("band scan failed at k = " +
                               momentum_string(k) + ": " + err.what());
    }
    if (!report.oracle_ok(opts.tol_oracle)) {
      throw std::runtime_error("band scan row disagrees with the dense "
                               "spectrum at k = " +
                               momentum_string(k));
    }
    // The report's discriminant route must match the closed form.
    const MatrixXcd closed = conv == CoinConvention::CaseI
                                 ? discriminant_case_i(d, k)
                                 : discriminant_case_ii(d, k);
    const Discriminant t =
        build_discriminant(bouquet, build_boundary(bouquet, cons), shift);
    if ((closed - t.matrix).cwiseAbs().maxCoeff() > 1e-12) {
      throw std::runtime_error("closed-form discriminant mismatch at k = " +
                               momentum_string(k));
    }

    BandScanRow row;
    row.k = kv;
    for (const auto& cluster : report.t_spectrum) {
      row.t_eigenvalues.insert(row.t_eigenvalues.end(), cluster.multiplicity,
                               cluster.mu);
    }
    for (const Complex& lam : report.predicted_spectrum()) {
      double angle = std::arg(lam);
      if (angle < 0.0) angle += kTwoPi;
      if (kTwoPi - angle < 1e-12) angle = 0.0;
      row.u_angles.push_back(angle);
    }
    std::sort(row.u_angles.begin(), row.u_angles.end());
    row.residual_plus = report.residual_plus;
    row.residual_minus = report.residual_minus;
    row.m_plus = report.ledger.m_plus;
    row.m_minus = report.ledger.m_minus;
    row.exceptional = exceptional_momentum(k);
    rows.push_back(std::move(row));

    int axis = d - 1;
    while (axis >= 0 && ++index[axis] == grid) index[axis--] = 0;
    if (axis < 0) break;
  }
  return rows;
}

void write_band_csv(std::ostream& out, const std::vector<BandScanRow>& rows) {
  if (rows.empty()) return;
  const auto& first = rows.front();
  const int d = static_cast<int>(first.k.size());
  for (int j = 1; j <= d; ++j) out << "k_" << j << ",";
  for (std::size_t i = 1; i <= first.t_eigenvalues.size(); ++i) {
    out << "t_eig_" << i << ",";
  }
  for (std::size_t i = 1; i <= first.u_angles.size(); ++i) {
    out << "u_angle_" << i << ",";
  }
  out << "m_plus,m_minus,exceptional\n";
  char buf[64];
  const auto put = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    out << buf << ",";
  };
  for (const auto& row : rows) {
    for (double kj : row.k) put(kj);
    for (double mu : row.t_eigenvalues) put(mu);
    for (double a : row.u_angles) put(a);
    out << row.m_plus << "," << row.m_minus << ","
        << (row.exceptional ? 1 : 0) << "\n";
  }
}

}  // namespace qwalk
