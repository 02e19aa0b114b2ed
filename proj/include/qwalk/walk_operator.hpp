#pragma once

#include <string>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"

namespace qwalk {

enum class ShiftKind { FlipFlop, Permutation, Twisted };

/// Arc-basis shift operator. Exactly one unit-modulus entry per row and
/// column; entry (r, c) is <delta_r, S delta_c>. FlipFlop and Twisted
/// variants are involutions.
struct ShiftMatrix {
  MatrixXcd matrix;
  ShiftKind kind = ShiftKind::FlipFlop;

  bool is_involution() const { return kind != ShiftKind::Permutation; }
};

/// Arc phase function; theta[inverse(a)] == -theta[a] is required, which
/// keeps the twisted shift an involution.
struct OneForm {
  std::vector<double> theta;
};

ShiftMatrix flipflop_shift(const Graph& g);
ShiftMatrix permutation_shift(const Graph& g, const ArcPermutation& pi);

/// (S_theta psi)(a) = e^{i theta(a)} psi(inverse(a)). theta == 0 reproduces
/// the flip-flop shift.
ShiftMatrix twisted_shift(const Graph& g, const OneForm& theta);

/// Block-diagonal coin operator on the arc space, one block per vertex in
/// the arcs_into(u) partition.
MatrixXcd coin_matrix(const Graph& g, const CoinAssignment& coins);

struct EvolutionMatrix {
  MatrixXcd matrix;
  ShiftKind shift_kind = ShiftKind::FlipFlop;
  std::string provenance;  ///< shift tag + dimensions; callers may extend
};

/// U = S * C. Validates dimensions and unitarity of the product.
EvolutionMatrix evolution(const ShiftMatrix& s, const MatrixXcd& coin);

/// One eigenvalue cluster of a unitary matrix.
struct SpectrumCluster {
  Complex value;      ///< normalized circular mean of the cluster
  int multiplicity = 0;
  MatrixXcd vectors;  ///< n x multiplicity (solver output, per-cluster columns)
  double diameter = 0.0;  ///< max angular spread within the cluster
};

/// Full dense eigendecomposition of a unitary matrix, clustered on the unit
/// circle by angular tolerance. Throws if the dimension exceeds the cap or
/// an eigenvalue strays off the circle by more than 1e-9.
std::vector<SpectrumCluster> dense_spectrum(const MatrixXcd& u,
                                            double tol_cluster = 1e-8,
                                            int dimension_cap = 4096);

/// Geodesic distance of two phases on the unit circle, in radians.
double angular_distance(Complex a, Complex b);

/// Greedy nearest matching of two equal-size eigenvalue multisets on the
/// unit circle; returns the worst matched angular distance.
double spectrum_multiset_distance(const std::vector<Complex>& a,
                                  std::vector<Complex> b);

}  // namespace qwalk
