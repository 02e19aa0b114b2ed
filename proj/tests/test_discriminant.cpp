#include <doctest.h>

#include <cmath>
#include <random>

#include "qwalk/coins.hpp"
#include "qwalk/discriminant.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/random_instances.hpp"
#include "qwalk/walk_operator.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = 3.14159265358979323846;

}  // namespace

TEST_CASE("lattice weight vectors, d = 3, kappa = -1") {
  const Graph g = bouquet_graph(3);
  const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseI);
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);
  // arcs: slots 0,1 = (+1,-1); 2,3 = (+2,-2); 4,5 = (+3,-3)
  for (int j = 1; j <= 3; ++j) {
    for (int eps = 0; eps < 2; ++eps) {
      const int arc = g.arcs_into(0)[2 * (j - 1) + eps];
      const VectorXcd wa = weight_vector(g, cons, arc);
      REQUIRE(wa.size() == 2);
      CHECK(std::abs(wa(0) - std::pow(w, -(j - 1)) / std::sqrt(6.0)) < 1e-14);
      CHECK(std::abs(wa(1) - std::pow(w, -2 * (j - 1)) / std::sqrt(6.0)) < 1e-14);
    }
  }
}

TEST_CASE("lattice weight vectors, d = 3, kappa = +1") {
  const Graph g = bouquet_graph(3);
  const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseII);
  const VectorXcd w_plus_x = weight_vector(g, cons, g.arcs_into(0)[0]);
  REQUIRE(w_plus_x.size() == 4);
  CHECK(std::abs(w_plus_x(0) - 1.0 / std::sqrt(6.0)) < 1e-14);
  CHECK(std::abs(w_plus_x(1) - 1.0 / std::sqrt(2.0)) < 1e-14);
  CHECK(std::abs(w_plus_x(2)) < 1e-14);
  CHECK(std::abs(w_plus_x(3)) < 1e-14);
}

TEST_CASE("grover weight vector is 1/sqrt(d) on every incoming arc") {
  const Graph g = complete_graph(4);
  const KernelBasis cons = kernel_cons(g, grover_coins(g));
  for (int a = 0; a < g.num_arcs(); ++a) {
    const VectorXcd w = weight_vector(g, cons, a);
    CHECK(std::abs(w(0) - 1.0 / std::sqrt(3.0)) < 1e-12);
  }
}

TEST_CASE("matrix weights for the d = 3 lattice walk") {
  const Graph g = bouquet_graph(3);
  const Complex w = std::polar(1.0, 2.0 * kPi / 3.0);

  SUBCASE("kappa = -1 weights") {
    const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseI);
    const MatrixXcd wx = matrix_weight(g, cons, g.arcs_into(0)[0]);
    const MatrixXcd wy = matrix_weight(g, cons, g.arcs_into(0)[2]);
    MatrixXcd wx_ref(2, 2), wy_ref(2, 2);
    wx_ref << 1, 1, 1, 1;
    wx_ref /= 6.0;
    wy_ref << 1.0, w, std::conj(w), 1.0;
    wy_ref /= 6.0;
    CHECK((wx - wx_ref).norm() < 1e-14);
    CHECK((wy - wy_ref).norm() < 1e-14);
  }

  SUBCASE("kappa = +1 weights") {
    const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseII);
    const MatrixXcd wx = matrix_weight(g, cons, g.arcs_into(0)[0]);
    MatrixXcd ref = MatrixXcd::Zero(4, 4);
    ref(0, 0) = 1.0 / 6.0;
    ref(0, 1) = -1.0 / std::sqrt(12.0);
    ref(1, 0) = 1.0 / std::sqrt(12.0);
    ref(1, 1) = -0.5;
    CHECK((wx - ref).norm() < 1e-14);
  }

  SUBCASE("rank at most one") {
    std::mt19937_64 rng(3);
    const Graph h = complete_graph(5);
    const KernelBasis cons = kernel_cons(
        h, random_two_point_coins(h, Complex(0, 1), Complex(0, -1), 2, rng));
    for (int a = 0; a < h.num_arcs(); ++a) {
      Eigen::JacobiSVD<MatrixXcd> svd(matrix_weight(h, cons, a));
      CHECK(svd.singularValues()(1) < 1e-12);
    }
  }
}

TEST_CASE("boundary operator is an isometry with local rows") {
  std::mt19937_64 rng(11);
  const Graph g = random_connected_graph(7, 5, rng);
  const CoinAssignment coins = random_two_point_coins(
      g, random_phase(rng), -random_phase(rng), 1, rng);
  const KernelBasis cons = kernel_cons(g, coins);
  const BoundaryOperator k = build_boundary(g, cons);
  const auto q = k.matrix.cols();
  CHECK((k.matrix.adjoint() * k.matrix - MatrixXcd::Identity(q, q)).norm() <
        1e-10);
  // row support: only the columns of the terminus vertex
  for (int a = 0; a < g.num_arcs(); ++a) {
    for (int u = 0; u < g.num_vertices(); ++u) {
      if (u == g.terminus(a)) continue;
      CHECK(k.matrix.row(a).segment(u, 1).norm() == 0.0);
    }
  }
  // K K^* is the projection onto the kappa eigenspaces
  MatrixXcd proj = MatrixXcd::Zero(g.num_arcs(), g.num_arcs());
  for (int u = 0; u < g.num_vertices(); ++u) {
    for (int a : g.arcs_into(u)) {
      for (int b : g.arcs_into(u)) {
        proj(a, b) += (cons.basis[u].row(g.coin_slot(a)) *
                       cons.basis[u].row(g.coin_slot(b)).adjoint())(0, 0);
      }
    }
  }
  CHECK((k.matrix * k.matrix.adjoint() - proj).norm() < 1e-10);
}

TEST_CASE("p = 1 Grover boundary on C4 has 1/sqrt(2) entries") {
  const Graph g = cycle_graph(4);
  const BoundaryOperator k =
      build_boundary(g, kernel_cons(g, grover_coins(g)));
  CHECK(k.matrix.rows() == 8);
  CHECK(k.matrix.cols() == 4);
  for (int a = 0; a < 8; ++a) {
    CHECK(std::abs(k.matrix(a, g.terminus(a)) - 1.0 / std::sqrt(2.0)) < 1e-12);
  }
}

TEST_CASE("discriminant of the Grover walk is the scaled adjacency matrix") {
  for (int n : {4, 5}) {
    const Graph g = complete_graph(n);
    const KernelBasis cons = kernel_cons(g, grover_coins(g));
    const Discriminant t =
        build_discriminant(g, build_boundary(g, cons), flipflop_shift(g));
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        const double expected = u == v ? 0.0 : 1.0 / (n - 1);
        CHECK(std::abs(t.matrix(u, v) - expected) < 1e-12);
      }
    }
  }
  const Graph c4 = cycle_graph(4);
  const Discriminant t = build_discriminant(
      c4, build_boundary(c4, kernel_cons(c4, grover_coins(c4))),
      flipflop_shift(c4));
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) {
      const bool adjacent = (u + 1) % 4 == v || (v + 1) % 4 == u;
      CHECK(std::abs(t.matrix(u, v) - (adjacent ? 0.5 : 0.0)) < 1e-12);
    }
  }
}

TEST_CASE("discriminant invariants on random instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = random_connected_graph(6 + trial, 5, rng);
    const int p = std::min(1 + trial % 2, g.min_degree());
    const CoinAssignment coins = random_two_point_coins(
        g, random_phase(rng), random_phase(rng) * Complex(0, 1), p, rng);
    const KernelBasis cons = kernel_cons(g, coins);
    const BoundaryOperator k = build_boundary(g, cons);
    const ShiftMatrix s = trial % 2 == 0
                              ? flipflop_shift(g)
                              : twisted_shift(g, random_one_form(g, rng));
    const Discriminant t = build_discriminant(g, k, s);
    CHECK((t.matrix - t.matrix.adjoint()).norm() < 1e-10);
    CHECK(t.matrix.operatorNorm() <= 1.0 + 1e-10);
    // vanishing blocks where no arc runs v -> u
    for (int u = 0; u < g.num_vertices(); ++u) {
      for (int v = 0; v < g.num_vertices(); ++v) {
        bool linked = false;
        for (int a : g.arcs_into(u)) linked |= g.origin(a) == v;
        if (!linked) {
          CHECK(t.matrix.block(u * p, v * p, p, p).norm() == 0.0);
        }
      }
    }
  }
}

TEST_CASE("twisted discriminant on the 3-bouquet equals the arrow matrix") {
  const Graph g = bouquet_graph(3);
  const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseII);
  const double kx = 0.9, ky = 2.2, kz = 5.1;
  OneForm theta;
  theta.theta = {kx, -kx, ky, -ky, kz, -kz};
  const Discriminant t = build_discriminant(
      g, build_boundary(g, cons), twisted_shift(g, theta));
  MatrixXcd ref = MatrixXcd::Zero(4, 4);
  ref(0, 0) = (std::cos(kx) + std::cos(ky) + std::cos(kz)) / 3.0;
  const double r3 = std::sqrt(3.0);
  const double sines[3] = {std::sin(kx), std::sin(ky), std::sin(kz)};
  const double cosines[3] = {std::cos(kx), std::cos(ky), std::cos(kz)};
  for (int j = 0; j < 3; ++j) {
    ref(0, j + 1) = -kImag / r3 * sines[j];
    ref(j + 1, 0) = kImag / r3 * sines[j];
    ref(j + 1, j + 1) = -cosines[j];
  }
  CHECK((t.matrix - ref).norm() < 1e-12);
}

TEST_CASE("coin reconstruction from the boundary operator") {
  const Graph g = complete_graph(4);

  SUBCASE("grover coins, kappa = 1") {
    const CoinAssignment coins = grover_coins(g);
    const BoundaryOperator k = build_boundary(g, kernel_cons(g, coins));
    CHECK(verify_coin_identity(coin_matrix(g, coins), k, coins.kappa,
                               coins.kappa_prime) < 1e-10);
  }

  SUBCASE("swap-grover coins, kappa = -1") {
    const Graph b = bouquet_graph(3);
    const CoinAssignment coins = moving_shift_coins(b, CoinConvention::CaseI);
    const BoundaryOperator k = build_boundary(b, kernel_cons(b, coins));
    CHECK(verify_coin_identity(coin_matrix(b, coins), k, coins.kappa,
                               coins.kappa_prime) < 1e-10);
  }

  SUBCASE("corrupted boundary flags a large residual") {
    const CoinAssignment coins = grover_coins(g);
    BoundaryOperator k = build_boundary(g, kernel_cons(g, coins));
    k.matrix(0, 0) += 0.5;
    CHECK(verify_coin_identity(coin_matrix(g, coins), k, coins.kappa,
                               coins.kappa_prime) > 0.1);
  }
}

TEST_CASE("path sums reproduce discriminant powers") {
  const Graph c4 = cycle_graph(4);
  CHECK(path_sum_check(c4, kernel_cons(c4, grover_coins(c4)), 1) < 1e-14);
  CHECK(path_sum_check(c4, kernel_cons(c4, grover_coins(c4)), 2) < 1e-12);
  const Graph k4 = complete_graph(4);
  CHECK(path_sum_check(k4, kernel_cons(k4, grover_coins(k4)), 3) < 1e-10);
  std::mt19937_64 rng(31);
  const Graph b3 = bouquet_graph(3);
  CHECK(path_sum_check(
            b3, kernel_cons(b3, moving_shift_coins(b3, CoinConvention::CaseII)),
            4) < 1e-10);
}

TEST_CASE("stochastic sums") {
  SUBCASE("torus with the closed-form basis") {
    const Graph g = torus_graph(3, 4);
    const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseI);
    const Discriminant t =
        build_discriminant(g, build_boundary(g, cons), flipflop_shift(g));
    const auto [row_res, col_res] = stochastic_sums(g, t);
    CHECK(row_res < 1e-10);
    CHECK(col_res < 1e-10);
  }

  SUBCASE("doubly stochastic p = 1 Grover discriminant on K4") {
    const Graph g = complete_graph(4);
    const Discriminant t = build_discriminant(
        g, build_boundary(g, kernel_cons(g, grover_coins(g))),
        flipflop_shift(g));
    const auto [row_res, col_res] = stochastic_sums(g, t);
    CHECK(row_res < 1e-10);
    CHECK(col_res < 1e-10);
  }

  SUBCASE("asymmetric-weight coins only report the deviation") {
    const Graph g = bouquet_graph(3);
    const KernelBasis cons = lattice_kernel_basis(g, CoinConvention::CaseII);
    const Discriminant t =
        build_discriminant(g, build_boundary(g, cons), flipflop_shift(g));
    const auto [row_res, col_res] = stochastic_sums(g, t);
    CHECK(row_res >= 0.0);
    CHECK(col_res >= 0.0);
  }
}
