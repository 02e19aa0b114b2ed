#include "qwalk/discriminant.hpp"

#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

void check_cons(const Graph& g, const KernelBasis& cons) {
  if (static_cast<int>(cons.basis.size()) != g.num_vertices()) {
    throw std::invalid_argument("basis count does not match vertex count");
  }
  for (int u = 0; u < g.num_vertices(); ++u) {
    if (cons.basis[u].rows() != g.degree(u) ||
        cons.basis[u].cols() != cons.multiplicity) {
      throw std::invalid_argument("basis at vertex " + std::to_string(u) +
                                  " has the wrong shape");
    }
  }
}

}  // namespace

VectorXcd weight_vector(const Graph& g, const KernelBasis& cons, int arc) {
  check_cons(g, cons);
  const int u = g.terminus(arc);
  return cons.basis[u].row(g.coin_slot(arc)).conjugate().transpose();
}

MatrixXcd matrix_weight(const Graph& g, const KernelBasis& cons, int arc) {
  const VectorXcd w = weight_vector(g, cons, arc);
  const VectorXcd w_inv = weight_vector(g, cons, g.inverse(arc));
  return w * w_inv.adjoint();
}

BoundaryOperator build_boundary(const Graph& g, const KernelBasis& cons) {
  check_cons(g, cons);
  const int p = cons.multiplicity;
  MatrixXcd k = MatrixXcd::Zero(g.num_arcs(), p * g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) {
    const auto& arcs = g.arcs_into(u);
    for (int s = 0; s < g.degree(u); ++s) {
      k.row(arcs[s]).segment(u * p, p) = cons.basis[u].row(s);
    }
  }
  return {std::move(k), p};
}

Discriminant build_discriminant(const Graph& g, const BoundaryOperator& k,
                                const ShiftMatrix& s) {
  if (!s.is_involution()) {
    throw std::invalid_argument(
        "discriminant needs an involutive shift (flip-flop or twisted)");
  }
  if (s.matrix.rows() != k.matrix.rows()) {
    throw std::invalid_argument("shift and boundary dimensions do not match");
  }
  const int p = k.multiplicity;
  MatrixXcd t = k.matrix.adjoint() * s.matrix * k.matrix;

  // Arc-sum route: block (t(a), o(a)) += s_{a,abar} * w(a) w(abar)^*,
  // where w(a)^* is row a of K on the block of t(a). Iterating arcs keeps
  // parallel edges summed.
  MatrixXcd blocks = MatrixXcd::Zero(t.rows(), t.cols());
  for (int a = 0; a < g.num_arcs(); ++a) {
    const int abar = g.inverse(a);
    const int u = g.terminus(a);
    const int v = g.origin(a);
    blocks.block(u * p, v * p, p, p) +=
        s.matrix(a, abar) * k.matrix.row(a).segment(u * p, p).adjoint() *
        k.matrix.row(abar).segment(v * p, p);
  }
  const double route_gap = (t - blocks).cwiseAbs().maxCoeff();
  if (route_gap > 1e-12) {
    throw std::runtime_error("discriminant routes disagree by " +
                             std::to_string(route_gap));
  }
  return {std::move(t), p};
}

double verify_coin_identity(const MatrixXcd& coin, const BoundaryOperator& k,
                            Complex kappa, Complex kappa_prime) {
  if (coin.rows() != k.matrix.rows()) {
    throw std::invalid_argument("coin and boundary dimensions do not match");
  }
  const auto n = coin.rows();
  return (coin - (kappa - kappa_prime) * k.matrix * k.matrix.adjoint() -
          kappa_prime * MatrixXcd::Identity(n, n))
      .norm();
}

double path_sum_check(const Graph& g, const KernelBasis& cons, int steps) {
  if (steps < 1 || steps > 4) {
    throw std::invalid_argument("path sums supported for 1..4 steps");
  }
  if (g.num_vertices() > 16) {
    throw std::invalid_argument("path enumeration capped at 16 vertices");
  }
  const int p = cons.multiplicity;
  const auto k = build_boundary(g, cons);
  const auto t = build_discriminant(g, k, flipflop_shift(g));
  MatrixXcd t_pow = t.matrix;
  for (int i = 1; i < steps; ++i) t_pow = t.matrix * t_pow;

  std::vector<MatrixXcd> weight(g.num_arcs());
  for (int a = 0; a < g.num_arcs(); ++a) weight[a] = matrix_weight(g, cons, a);

  // Arcs leaving each vertex (o(a) = u), for the forward path walk.
  std::vector<std::vector<int>> arcs_out(g.num_vertices());
  for (int a = 0; a < g.num_arcs(); ++a) arcs_out[g.origin(a)].push_back(a);

  MatrixXcd sum = MatrixXcd::Zero(t_pow.rows(), t_pow.cols());
  // Paths (a_1, ..., a_n): v = o(a_1), chained, u = t(a_n); contribution
  // W(a_n) ... W(a_1) lands in block (u, v).
  struct Frame {
    int vertex;
    int depth;
    MatrixXcd product;
  };
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<Frame> stack{{v, 0, MatrixXcd::Identity(p, p)}};
    while (!stack.empty()) {
      Frame f = std::move(stack.back());
      stack.pop_back();
      if (f.depth == steps) {
        sum.block(f.vertex * p, v * p, p, p) += f.product;
        continue;
      }
      for (int a : arcs_out[f.vertex]) {
        stack.push_back({g.terminus(a), f.depth + 1, weight[a] * f.product});
      }
    }
  }
  return (t_pow - sum).cwiseAbs().maxCoeff();
}

std::pair<double, double> stochastic_sums(const Graph& g,
                                          const Discriminant& t) {
  const int p = t.multiplicity;
  const int n = g.num_vertices();
  if (t.matrix.rows() != p * n) {
    throw std::invalid_argument("discriminant does not match the graph");
  }
  const MatrixXcd identity = MatrixXcd::Identity(p, p);
  double row_residual = 0.0, col_residual = 0.0;
  for (int v = 0; v < n; ++v) {
    MatrixXcd col_sum = MatrixXcd::Zero(p, p);
    MatrixXcd row_sum = MatrixXcd::Zero(p, p);
    for (int u = 0; u < n; ++u) {
      col_sum += t.matrix.block(u * p, v * p, p, p);
      row_sum += t.matrix.block(v * p, u * p, p, p);
    }
    col_residual = std::max(col_residual, (col_sum - identity).norm());
    row_residual = std::max(row_residual, (row_sum - identity).norm());
  }
  return {row_residual, col_residual};
}

}  // namespace qwalk
