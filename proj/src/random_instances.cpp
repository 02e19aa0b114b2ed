#include "qwalk/random_instances.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace qwalk {

MatrixXcd random_unitary(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  MatrixXcd z(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) z(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<MatrixXcd> qr(z);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Complex random_phase(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  return std::polar(1.0, angle(rng));
}

CoinAssignment random_two_point_coins(const Graph& g, Complex kappa,
                                      Complex kappa_prime, int p,
                                      std::mt19937_64& rng) {
  if (p < 1 || p > g.min_degree()) {
    throw std::invalid_argument("p must lie in 1..min_degree");
  }
  CoinAssignment coins;
  coins.kappa = kappa;
  coins.kappa_prime = kappa_prime;
  coins.multiplicity = p;
  coins.coin.reserve(g.num_vertices());
  for (int u = 0; u < g.num_vertices(); ++u) {
    const int d = g.degree(u);
    const MatrixXcd q = random_unitary(d, rng);
    VectorXcd diag(d);
    for (int i = 0; i < d; ++i) diag(i) = i < p ? kappa : kappa_prime;
    coins.coin.push_back(q * diag.asDiagonal() * q.adjoint());
  }
  return coins;
}

Graph random_connected_graph(int n_vertices, int extra_edges,
                             std::mt19937_64& rng) {
  if (n_vertices < 2) throw std::invalid_argument("need at least 2 vertices");
  std::vector<int> order(n_vertices);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < n_vertices; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[pick(rng)], order[i]);
  }
  std::uniform_int_distribution<int> vertex(0, n_vertices - 1);
  for (int i = 0; i < extra_edges; ++i) {
    const int u = vertex(rng);
    int v = vertex(rng);
    while (v == u) v = vertex(rng);
    edges.emplace_back(u, v);
  }
  return Graph::from_edges(n_vertices, edges);
}

OneForm random_one_form(const Graph& g, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-std::numbers::pi,
                                               std::numbers::pi);
  OneForm theta;
  theta.theta.assign(g.num_arcs(), 0.0);
  for (int a = 0; a < g.num_arcs(); ++a) {
    if (a < g.inverse(a)) {
      theta.theta[a] = angle(rng);
      theta.theta[g.inverse(a)] = -theta.theta[a];
    }
  }
  return theta;
}

ArcPermutation random_shift_permutation(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> images(g.num_arcs());
  for (int u = 0; u < g.num_vertices(); ++u) {
    // Incoming arcs map onto outgoing ones (the inverses of the incoming).
    std::vector<int> out_arcs;
    out_arcs.reserve(g.degree(u));
    for (int a : g.arcs_into(u)) out_arcs.push_back(g.inverse(a));
    std::shuffle(out_arcs.begin(), out_arcs.end(), rng);
    int i = 0;
    for (int a : g.arcs_into(u)) images[a] = out_arcs[i++];
  }
  return ArcPermutation(std::move(images));
}

std::vector<WalkInstance> verification_roster(unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<WalkInstance> roster;
  roster.reserve(20);

  // Unit pair with a guaranteed gap, so 1/(kappa - kappa') stays bounded
  // across seeds.
  const auto random_pair = [&rng](Complex& kappa, Complex& kappa_prime) {
    kappa = random_phase(rng);
    do {
      kappa_prime = random_phase(rng);
    } while (std::abs(kappa - kappa_prime) < 0.5);
  };

  const auto add_flipflop = [&](std::string name, Graph g, CoinAssignment c) {
    ShiftMatrix s = flipflop_shift(g);
    roster.push_back({std::move(name), std::move(g), std::move(c), std::move(s)});
  };
  const auto add_twisted = [&](std::string name, Graph g, CoinAssignment c) {
    ShiftMatrix s = twisted_shift(g, random_one_form(g, rng));
    roster.push_back({std::move(name), std::move(g), std::move(c), std::move(s)});
  };

  {
    Graph g = cycle_graph(4);
    add_flipflop("C4/grover", g, grover_coins(g));
  }
  {
    Graph g = cycle_graph(7);
    add_flipflop("C7/grover", g, grover_coins(g));
  }
  {
    Graph g = complete_graph(4);
    add_flipflop("K4/grover", g, grover_coins(g));
  }
  {
    Graph g = complete_graph(6);
    add_flipflop("K6/grover", g, grover_coins(g));
  }
  {
    Graph g = bouquet_graph(3);
    add_flipflop("B3/swap-grover/-1", g,
                 moving_shift_coins(g, CoinConvention::CaseI));
  }
  {
    Graph g = bouquet_graph(3);
    add_flipflop("B3/swap-grover/+1", g,
                 moving_shift_coins(g, CoinConvention::CaseII));
  }
  {
    Graph g = bouquet_graph(4);
    add_flipflop("B4/swap-grover/-1", g,
                 moving_shift_coins(g, CoinConvention::CaseI));
  }
  {
    Graph g = bouquet_graph(2);
    add_flipflop("B2/swap-grover/+1", g,
                 moving_shift_coins(g, CoinConvention::CaseII));
  }
  {
    Graph g = torus_graph(2, 3);
    add_flipflop("T(2,3)/grover", g, grover_coins(g));
  }
  {
    Graph g = torus_graph(2, 3);
    add_flipflop("T(2,3)/swap-grover/-1", g,
                 moving_shift_coins(g, CoinConvention::CaseI));
  }
  {
    Graph g = cycle_graph(5);
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_flipflop("C5/random", g,
                 random_two_point_coins(g, kappa, kappa_prime, 1, rng));
  }
  {
    Graph g = cycle_graph(6);
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_flipflop("C6/random-p2", g,
                 random_two_point_coins(g, kappa, kappa_prime, 2, rng));
  }
  {
    Graph g = complete_graph(5);
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_flipflop("K5/random-p2", g,
                 random_two_point_coins(g, kappa, kappa_prime, 2, rng));
  }
  {
    Graph g = complete_graph(4);
    add_flipflop("K4/random-p3", g,
                 random_two_point_coins(g, Complex(0, 1), Complex(0, -1), 3,
                                        rng));
  }
  {
    Graph g = random_connected_graph(8, 6, rng);
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_flipflop("rand8/random-p1", g,
                 random_two_point_coins(g, kappa, kappa_prime, 1, rng));
  }
  {
    Graph g = random_connected_graph(10, 8, rng);
    const int p = std::min(2, g.min_degree());
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_flipflop("rand10/random", g,
                 random_two_point_coins(g, kappa, kappa_prime, p, rng));
  }
  {
    Graph g = random_connected_graph(12, 9, rng);
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_flipflop("rand12/random-p1", g,
                 random_two_point_coins(g, kappa, kappa_prime, 1, rng));
  }
  {
    Graph g = bouquet_graph(3);
    add_twisted("B3/swap-grover/-1/twisted", g,
                moving_shift_coins(g, CoinConvention::CaseI));
  }
  {
    Graph g = cycle_graph(6);
    add_twisted("C6/grover/twisted", g, grover_coins(g));
  }
  {
    Graph g = random_connected_graph(9, 7, rng);
    Complex kappa, kappa_prime;
    random_pair(kappa, kappa_prime);
    add_twisted("rand9/random/twisted", g,
                random_two_point_coins(g, kappa, kappa_prime, 1, rng));
  }
  return roster;
}

}  // namespace qwalk
