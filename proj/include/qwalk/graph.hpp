#pragma once

#include <utility>
#include <vector>

namespace qwalk {

/// Finite multigraph stored as a symmetric arc list. Every unoriented edge
/// (self-loops included) contributes two mutually inverse arcs, so the arc
/// count is always even. Vertex and arc indices are dense and frozen at
/// construction; they fix the basis order of every operator built on top.
class Graph {
 public:
  /// Edge i yields arcs 2i (u -> v) and 2i+1 (v -> u). Self-loops and
  /// parallel edges are allowed.
  static Graph from_edges(int n_vertices,
                          const std::vector<std::pair<int, int>>& edges);

  /// General form: endpoints[a] = (origin, terminus), inv an involution with
  /// origin(inv(a)) == terminus(a). Validates all structural invariants.
  Graph(int n_vertices, std::vector<std::pair<int, int>> endpoints,
        std::vector<int> inv);

  int num_vertices() const { return n_vertices_; }
  int num_arcs() const { return static_cast<int>(origin_.size()); }
  int num_edges() const { return num_arcs() / 2; }
  int origin(int a) const { return origin_[a]; }
  int terminus(int a) const { return terminus_[a]; }
  int inverse(int a) const { return inv_[a]; }
  int degree(int u) const { return static_cast<int>(arcs_into_[u].size()); }
  int min_degree() const;

  /// Arcs a with terminus(a) == u, in canonical (coin basis) order.
  const std::vector<int>& arcs_into(int u) const { return arcs_into_[u]; }

  /// Position of arc a within arcs_into(terminus(a)).
  int coin_slot(int a) const { return slot_[a]; }

  bool is_connected() const;

 private:
  void index_arcs();

  int n_vertices_ = 0;
  std::vector<int> origin_;
  std::vector<int> terminus_;
  std::vector<int> inv_;
  std::vector<int> slot_;
  std::vector<std::vector<int>> arcs_into_;
};

Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph bouquet_graph(int n_loops);

/// Discrete torus (Z/side)^d. Arcs into each vertex are ordered
/// (+e_1, -e_1, ..., +e_d, -e_d), where (x; +j) runs from x - e_j to x.
/// side < 3 is rejected: parallel edges would collide with that labeling.
Graph torus_graph(int dim, int side);

/// Permutation of the arc set constrained to be shift-compatible:
/// origin(pi(a)) == terminus(a) for every arc.
class ArcPermutation {
 public:
  explicit ArcPermutation(std::vector<int> images);
  int operator()(int a) const { return images_[a]; }
  int size() const { return static_cast<int>(images_.size()); }

 private:
  std::vector<int> images_;
};

ArcPermutation flip_flop_permutation(const Graph& g);

/// Lattice translation shift on torus_graph(dim, side): (x; +-j) moves to
/// (x +- e_j; +-j).
ArcPermutation moving_shift_permutation(int dim, int side);

/// Throws std::invalid_argument naming the first offending arc if pi is not
/// a shift-compatible bijection on the arcs of g.
void validate_shift_permutation(const Graph& g, const ArcPermutation& pi);

}  // namespace qwalk
