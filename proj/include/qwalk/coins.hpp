#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

/// An eigenvalue of some coin lies off both declared values.
struct SpectrumViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The kappa eigenspace of some coin does not have the declared dimension.
struct MultiplicityViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-vertex unitary coins plus the declared two-point-spectrum
/// certificate: Spec(C_u) within {kappa, kappa_prime} and the kappa
/// eigenspace of dimension p at every vertex. The certificate is checked by
/// certify_two_point_spectrum, not at construction.
struct CoinAssignment {
  std::vector<MatrixXcd> coin;  ///< coin[u] is degree(u) x degree(u), basis = arcs_into(u)
  Complex kappa{1.0, 0.0};
  Complex kappa_prime{-1.0, 0.0};
  int multiplicity = 1;  ///< p
};

/// Orthonormal basis of the kappa eigenspace at each vertex; basis[u] is
/// degree(u) x p with orthonormal columns.
struct KernelBasis {
  std::vector<MatrixXcd> basis;
  int multiplicity = 1;
};

/// (2/n) J - I. Symmetric, unitary, fixes the uniform vector.
MatrixXcd grover_matrix(int n);

/// Pairwise-swapped Grover matrix sigma * Gr(2d) on arcs ordered
/// (+1, -1, +2, -2, ..., +d, -d); sigma transposes each (+j, -j) pair.
/// Spectrum {1, -1} with multiplicities (d+1, d-1).
MatrixXcd moving_shift_coin(int d);

/// Grover coins everywhere, certificate (kappa, kappa', p) = (1, -1, 1).
CoinAssignment grover_coins(const Graph& g);

/// Certificate convention for sigma*Gr(2d) lattice coins. The two
/// conventions select which Grover eigenvalue plays the role of kappa:
/// CaseI tracks the (d-1)-dimensional -1 eigenspace, CaseII the
/// (d+1)-dimensional +1 eigenspace.
enum class CoinConvention { CaseI, CaseII };

/// sigma*Gr(2d) at every vertex of a 2d-regular graph whose arc order
/// follows the (+-e_j) labeling (bouquet_graph, torus_graph).
CoinAssignment moving_shift_coins(const Graph& g, CoinConvention conv);

/// Closed-form kappa eigenbasis for moving_shift_coins, identical at every
/// vertex. CaseI columns are (1/sqrt(2d)) [1, w^i, ..., w^{i(d-1)}] kron [1,1]
/// with w = exp(2 pi i / d), i = 1..d-1; CaseII columns are the uniform
/// vector followed by e_j kron [1,-1]/sqrt(2), j = 1..d.
KernelBasis lattice_kernel_basis(const Graph& g, CoinConvention conv);

/// Checks unitarity and the two-point-spectrum certificate of every coin.
/// Returns per-vertex (dim ker(kappa - C_u), dim ker(kappa' - C_u)).
/// Throws SpectrumViolation or MultiplicityViolation naming the vertex.
std::vector<std::pair<int, int>> certify_two_point_spectrum(
    const Graph& g, const CoinAssignment& coins, double tol_cluster = 1e-8);

/// Deterministic orthonormal basis of ker(kappa - C_u) per vertex: the
/// kappa-cluster eigenvectors of the Hermitian eigenprojector, re-orthonormalized,
/// each phased so its first nonzero component is real positive, ordered by
/// that pivot index. Requires a valid certificate.
KernelBasis kernel_cons(const Graph& g, const CoinAssignment& coins,
                        double tol_cluster = 1e-8);

/// Rewrites a general-shift walk as a flip-flop walk: each coin is
/// left-multiplied by the local permutation sending slot(a) to
/// slot(inverse(pi(a))), so that S_pi C == S_0 C'. The certificate fields
/// are copied through unchanged; the converted matrices generally need
/// re-certification (their spectrum can differ from the input's).
CoinAssignment to_flipflop_coin(const Graph& g, const ArcPermutation& pi,
                                const CoinAssignment& coins);

}  // namespace qwalk
