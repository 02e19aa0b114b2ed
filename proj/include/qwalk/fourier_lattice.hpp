#pragma once

#include <iosfwd>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/spectral_lift.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// Wave number on the d-torus; components constrained to [0, 2*pi).
class Momentum {
 public:
  explicit Momentum(std::vector<double> components);
  int dim() const { return static_cast<int>(k_.size()); }
  double operator[](int j) const { return k_[j]; }
  const std::vector<double>& components() const { return k_; }

 private:
  std::vector<double> k_;
};

/// Momentum-space shift on the 2d arc labels (+1, -1, ..., +d, -d):
/// (S(k) g)(eps j) = e^{i eps k_j} g(-eps j). An involution; equals the
/// twisted shift of the d-bouquet with arc phases theta(eps j) = eps k_j.
MatrixXcd fourier_shift(int d, const Momentum& k);

/// U(k) = S(k) * (sigma Gr(2d)); at k = 0 this degenerates to Gr(2d).
MatrixXcd fourier_evolution(int d, const Momentum& k);

/// Momentum-space discriminant for the (kappa, kappa') = (-1, 1) coin
/// certificate, a (d-1) x (d-1) Hermitian matrix. Built as K_o^* S(k) K_o
/// from the closed-form eigenbasis and cross-checked against the
/// weight-sum form 2 sum_j cos(k_j) W_j. Needs d >= 2.
MatrixXcd discriminant_case_i(int d, const Momentum& k);

/// Momentum-space discriminant for (kappa, kappa') = (1, -1): the
/// (d+1) x (d+1) Hermitian arrow matrix with head (1/d) sum_j cos k_j,
/// border -+(i/sqrt(d)) sin k_j and diagonal -cos k_j. Cross-checked
/// against K_o^* S(k) K_o.
MatrixXcd discriminant_case_ii(int d, const Momentum& k);

/// Coefficients of the degree d+1 monic real polynomial P whose roots are
/// the case-ii discriminant eigenvalues, expressed through elementary
/// symmetric functions of Gamma = {-(1/d) sum cos k_j, cos k_1, ..., cos k_d}.
/// The empty symmetric function is 1, which the cross-check against the
/// arrow-matrix characteristic polynomial pins down.
struct EigenPolyCoeffs {
  VectorXd eta;    ///< eta_1 .. eta_{d+1}
  VectorXd gamma;  ///< gamma_0 .. gamma_{d+1} of Gamma

  /// [1, eta_1, ..., eta_{d+1}], highest degree first.
  std::vector<double> monic_coeffs() const;
  double evaluate(double x) const;
  double derivative(double x) const;
};

EigenPolyCoeffs eigenpoly_coeffs(int d, const Momentum& k);

/// Roots via companion-matrix eigenvalues; coefficients highest first,
/// leading coefficient 1.
std::vector<Complex> polynomial_roots(const std::vector<double>& monic_coeffs);

/// Multiplicities of +-1 as roots of P, decided by successive derivative
/// magnitudes (threshold 1e-9 relative to the coefficient scale), plus the
/// wave-number criterion for non-simple roots: x = +1 degenerates iff at
/// least two cos k_j equal -1, and x = -1 iff at least two equal +1.
struct Pm1Multiplicity {
  int m_plus = 1;
  int m_minus = 1;
  bool exceptional = false;
};

Pm1Multiplicity pm1_multiplicity(int d, const Momentum& k);

/// True when the momentum lies in either degenerate set of the +-1 root
/// criterion.
bool exceptional_momentum(const Momentum& k);

/// One verified grid point of a band scan.
struct BandScanRow {
  std::vector<double> k;
  std::vector<double> t_eigenvalues;  ///< ascending, with multiplicity
  std::vector<double> u_angles;       ///< ascending, in [0, 2*pi)
  int residual_plus = 0;
  int residual_minus = 0;
  int m_plus = 0;
  int m_minus = 0;
  bool exceptional = false;
};

/// Full k-grid sweep with k_j = 2*pi*l_j / grid, l_j = 0..grid-1, in
/// lexicographic order (last axis fastest). Every row is verified against
/// the dense spectrum of U(k) and against the closed-form discriminant;
/// a failed row aborts with the offending k in the message.
std::vector<BandScanRow> band_scan(int d, int grid, CoinConvention conv,
                                   const ReportOptions& opts = {});

/// Columns: k_1..k_d, t_eig_*, u_angle_*, m_plus, m_minus, exceptional.
/// Values at 17 significant digits.
void write_band_csv(std::ostream& out, const std::vector<BandScanRow>& rows);

}  // namespace qwalk
