#pragma once

#include <utility>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/discriminant.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk_operator.hpp"

namespace qwalk {

/// One real eigenvalue cluster of the discriminant, with an orthonormal
/// eigenbasis.
struct TEigenCluster {
  double mu = 0.0;
  int multiplicity = 0;
  MatrixXcd vectors;  ///< p|V| x multiplicity
};

/// Eigendecomposition of a Hermitian discriminant; eigenvalues ascending,
/// clustered by tol_cluster and clipped into [-1, 1] when within tolerance.
std::vector<TEigenCluster> eig_discriminant(const Discriminant& t,
                                            double tol_cluster = 1e-8);

enum class LiftKind { Interior, BoundaryPlus, BoundaryMinus };

/// Unit-circle image(s) of one discriminant eigenvalue: the roots of
/// lambda^2 - (kappa - kappa') mu lambda - kappa kappa' = 0. Interior mu
/// yields two values; mu = +-1 collapses to the single value +-kappa.
struct LiftedPair {
  double mu = 0.0;
  LiftKind kind = LiftKind::Interior;
  std::vector<Complex> lambdas;
};

LiftedPair lift_eigenvalue(double mu, Complex kappa, Complex kappa_prime,
                           double tol_boundary = 1e-8);

/// Maps an eigenvector g of T (for eigenvalue mu) to an eigenvector of U
/// for the lifted value lambda: psi = (I + lambda/kappa' S) K g, except the
/// boundary case with kappa + kappa' = 0 where psi = K g. Returns psi
/// normalized; throws on an inconsistent (mu, lambda) pair or a zero lift.
VectorXcd lift_eigenvector(double mu, const VectorXcd& g_vec, Complex lambda,
                           const BoundaryOperator& k, const ShiftMatrix& s,
                           Complex kappa, Complex kappa_prime);

/// Orthonormal bases of ker K^* intersected with the +1 / -1 eigenspaces of
/// S: the eigenspaces of U for +kappa' and -kappa' outside the inherited
/// subspace. tol_rank is a singular-value threshold; its default is the
/// square root of the eigenvalue tolerance 1e-8, since a discriminant
/// eigenvalue at distance delta from +-1 shows up here as a singular value
/// of order sqrt(delta).
std::pair<MatrixXcd, MatrixXcd> residual_eigenspace(const BoundaryOperator& k,
                                                    const ShiftMatrix& s,
                                                    double tol_rank = 1e-4);

/// Evaluates det(lambda I - U) against
/// (lambda^2 - kappa'^2)^{|E| - p|V|} det((lambda^2 - kappa kappa') I -
/// (kappa - kappa') lambda T) at the given sample points; returns the max
/// relative deviation. Samples too close to a zero of either side are
/// rotated off it automatically.
double charpoly_identity_check(const EvolutionMatrix& u, const Discriminant& t,
                               Complex kappa, Complex kappa_prime,
                               const std::vector<Complex>& samples);

/// count random points on the circle |lambda| = 2.
std::vector<Complex> charpoly_sample_points(int count, unsigned long long seed);

struct LiftedEigenspace {
  LiftedPair pair;
  int multiplicity = 0;           ///< multiplicity of mu in Spec(T)
  std::vector<MatrixXcd> vectors; ///< per lambda: |A| x multiplicity, unit columns
  double max_residual = 0.0;      ///< max ||U psi - lambda psi|| over columns
};

struct DimensionLedger {
  int m_plus = 0;        ///< dim ker(1 - T)
  int m_minus = 0;       ///< dim ker(1 + T)
  int dim_inherited = 0; ///< dim L = 2p|V| - (m_plus + m_minus)
  int dim_residual = 0;  ///< dim L^perp = 2|E| - dim L
  int dim_overlap = 0;   ///< dim(K V_p intersect S K V_p) = m_plus + m_minus
};

struct ReportOptions {
  double tol_cluster = 1e-8;
  double tol_boundary = 1e-8;
  double tol_rank = 1e-4;
  double tol_oracle = 1e-7;
  int dense_cap = 4096;
};

/// Complete spectral account of one walk: Spec(T), the lifted eigenpairs of
/// U on the inherited subspace, the residual +-kappa' multiplicities, the
/// dimension ledger, and the distance to the dense-eigendecomposition
/// oracle.
struct SpectrumReport {
  Complex kappa;
  Complex kappa_prime;
  int multiplicity = 1;  ///< p
  int n_edges = 0;
  int n_vertices = 0;
  std::vector<TEigenCluster> t_spectrum;
  std::vector<LiftedEigenspace> lifted;
  int residual_plus = 0;   ///< multiplicity of +kappa' on L^perp
  int residual_minus = 0;  ///< multiplicity of -kappa' on L^perp
  DimensionLedger ledger;
  double max_lift_residual = 0.0;  ///< worst relative eigenvector residual
  double oracle_delta = 0.0;       ///< multiset distance to dense spectrum

  bool oracle_ok(double tol = 1e-7) const { return oracle_delta <= tol; }

  /// The predicted spectrum of U with multiplicity: every lifted value
  /// repeated by its cluster multiplicity plus the residual +-kappa'
  /// copies. Size 2|E|.
  std::vector<Complex> predicted_spectrum() const;
};

SpectrumReport full_report(const Graph& g, const CoinAssignment& coins,
                           const ShiftMatrix& s,
                           const ReportOptions& opts = {});

/// Same, but with a caller-supplied kappa eigenbasis (the report spectrum
/// does not depend on the choice; the boundary operator does).
SpectrumReport full_report(const Graph& g, const CoinAssignment& coins,
                           const ShiftMatrix& s, const KernelBasis& cons,
                           const ReportOptions& opts = {});

}  // namespace qwalk
