#pragma once

#include <utility>

#include "qwalk/coins.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk_operator.hpp"

namespace qwalk {

/// Isometry from the vertex block space C^{p|V|} into the arc space.
/// Column u*p + j carries the j-th kappa-eigenbasis vector at vertex u;
/// row a is supported on the p columns of terminus(a) and equals the
/// conjugate of the arc weight vector w(a) there.
struct BoundaryOperator {
  MatrixXcd matrix;  ///< |A| x p|V|
  int multiplicity = 1;
};

/// w(a): p entries, conj of the kappa-eigenbasis components at arc a.
VectorXcd weight_vector(const Graph& g, const KernelBasis& cons, int arc);

/// W(a) = w(a) w(inverse(a))^*; rank at most one.
MatrixXcd matrix_weight(const Graph& g, const KernelBasis& cons, int arc);

BoundaryOperator build_boundary(const Graph& g, const KernelBasis& cons);

/// Hermitian discriminant on C^{p|V|} with p x p blocks; block (u, v) sums
/// the matrix weights of the arcs from v to u.
struct Discriminant {
  MatrixXcd matrix;  ///< p|V| x p|V|
  int multiplicity = 1;
};

/// T = K^* S K for an involutive shift (flip-flop or twisted). Also
/// assembles the arc-sum block formula and cross-checks the two routes to
/// 1e-12 before returning.
Discriminant build_discriminant(const Graph& g, const BoundaryOperator& k,
                                const ShiftMatrix& s);

/// Residual of the reconstruction C = (kappa - kappa') K K^* + kappa' I.
double verify_coin_identity(const MatrixXcd& coin, const BoundaryOperator& k,
                            Complex kappa, Complex kappa_prime);

/// Compares T^n against the explicit sum of weight products over length-n
/// arc paths (flip-flop discriminant); returns the max block residual.
double path_sum_check(const Graph& g, const KernelBasis& cons, int steps);

/// Max deviations of block-row and block-column sums of T from the p x p
/// identity. A guarantee only under uniform-coin hypotheses with
/// w(inverse(a)) == w(a); otherwise informative output.
std::pair<double, double> stochastic_sums(const Graph& g,
                                          const Discriminant& t);

}  // namespace qwalk
