#pragma once

#include <random>
#include <string>
#include <vector>

#include "qwalk/coins.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/types.hpp"
#include "qwalk/walk_operator.hpp"

namespace qwalk {

/// Haar-ish random unitary: QR of a complex Gaussian matrix with the R
/// diagonal phases absorbed.
MatrixXcd random_unitary(int n, std::mt19937_64& rng);

/// Random unitary coins with exact spectrum {kappa (x p), kappa' (x d-p)}
/// at every vertex.
CoinAssignment random_two_point_coins(const Graph& g, Complex kappa,
                                      Complex kappa_prime, int p,
                                      std::mt19937_64& rng);

/// Random spanning tree plus extra random edges; always connected.
Graph random_connected_graph(int n_vertices, int extra_edges,
                             std::mt19937_64& rng);

/// Antisymmetric arc phases, uniform in (-pi, pi].
OneForm random_one_form(const Graph& g, std::mt19937_64& rng);

/// Random shift-compatible permutation: at each vertex, a random bijection
/// from the incoming arcs onto the outgoing ones.
ArcPermutation random_shift_permutation(const Graph& g, std::mt19937_64& rng);

Complex random_phase(std::mt19937_64& rng);

/// One named walk configuration for the verification roster.
struct WalkInstance {
  std::string name;
  Graph graph;
  CoinAssignment coins;
  ShiftMatrix shift;
};

/// The standard 20-instance roster: cycles, complete graphs, bouquets, a
/// torus, and random connected graphs; Grover, swap-Grover and random
/// two-point coins; flip-flop and twisted shifts.
std::vector<WalkInstance> verification_roster(unsigned long long seed);

}  // namespace qwalk
