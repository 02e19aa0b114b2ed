#include "qwalk/graph.hpp"

#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace qwalk {

namespace {

// x_1 is the fastest axis: vid = x_1 + side*(x_2 + side*(...)).
int lattice_vertex(const std::vector<int>& x, int side) {
  int v = 0;
  for (int j = static_cast<int>(x.size()) - 1; j >= 0; --j) {
    v = v * side + x[j];
  }
  return v;
}

std::vector<int> lattice_point(int v, int dim, int side) {
  std::vector<int> x(dim);
  for (int j = 0; j < dim; ++j) {
    x[j] = v % side;
    v /= side;
  }
  return x;
}

// Arc (x; eps j), eps in {+1,-1}, j in 1..dim.
int lattice_arc(const std::vector<int>& x, int j, int eps, int side) {
  const int dim = static_cast<int>(x.size());
  return 2 * dim * lattice_vertex(x, side) + 2 * (j - 1) + (eps > 0 ? 0 : 1);
}

std::vector<int> shifted(std::vector<int> x, int j, int step, int side) {
  x[j - 1] = ((x[j - 1] + step) % side + side) % side;
  return x;
}

}  // namespace

Graph Graph::from_edges(int n_vertices,
                        const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> endpoints;
  std::vector<int> inv;
  endpoints.reserve(2 * edges.size());
  inv.reserve(2 * edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n_vertices || v < 0 || v >= n_vertices) {
      throw std::out_of_range("edge endpoint " + std::to_string(u) + "-" +
                              std::to_string(v) + " out of vertex range");
    }
    const int a = static_cast<int>(endpoints.size());
    endpoints.emplace_back(u, v);
    endpoints.emplace_back(v, u);
    inv.push_back(a + 1);
    inv.push_back(a);
  }
  return Graph(n_vertices, std::move(endpoints), std::move(inv));
}

Graph::Graph(int n_vertices, std::vector<std::pair<int, int>> endpoints,
             std::vector<int> inv)
    : n_vertices_(n_vertices) {
  if (n_vertices <= 0) throw std::invalid_argument("graph needs vertices");
  origin_.reserve(endpoints.size());
  terminus_.reserve(endpoints.size());
  for (const auto& [o, t] : endpoints) {
    origin_.push_back(o);
    terminus_.push_back(t);
  }
  inv_ = std::move(inv);
  index_arcs();
}

void Graph::index_arcs() {
  const int m = num_arcs();
  if (m % 2 != 0) throw std::invalid_argument("arc count must be even");
  if (static_cast<int>(inv_.size()) != m) {
    throw std::invalid_argument("inverse map size mismatch");
  }
  for (int a = 0; a < m; ++a) {
    if (origin_[a] < 0 || origin_[a] >= n_vertices_ || terminus_[a] < 0 ||
        terminus_[a] >= n_vertices_) {
      throw std::out_of_range("arc endpoint out of vertex range");
    }
    const int b = inv_[a];
    if (b < 0 || b >= m || inv_[b] != a || b == a) {
      throw std::invalid_argument("inverse map is not a fixed-point-free involution");
    }
    if (origin_[b] != terminus_[a] || terminus_[b] != origin_[a]) {
      throw std::invalid_argument("arc " + std::to_string(a) +
                                  ": inverse does not swap endpoints");
    }
  }
  arcs_into_.assign(n_vertices_, {});
  slot_.assign(m, -1);
  for (int a = 0; a < m; ++a) {
    slot_[a] = static_cast<int>(arcs_into_[terminus_[a]].size());
    arcs_into_[terminus_[a]].push_back(a);
  }
  for (int u = 0; u < n_vertices_; ++u) {
    if (arcs_into_[u].empty()) {
      throw std::invalid_argument("vertex " + std::to_string(u) + " is isolated");
    }
  }
}

int Graph::min_degree() const {
  int d = degree(0);
  for (int u = 1; u < n_vertices_; ++u) d = std::min(d, degree(u));
  return d;
}

bool Graph::is_connected() const {
  std::vector<char> seen(n_vertices_, 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int a : arcs_into_[u]) {
      const int v = origin_[a];
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push(v);
      }
    }
  }
  return reached == n_vertices_;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  if (n < 2) throw std::invalid_argument("complete graph needs at least 2 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph bouquet_graph(int n_loops) {
  if (n_loops < 1) throw std::invalid_argument("bouquet needs at least one loop");
  std::vector<std::pair<int, int>> edges(n_loops, {0, 0});
  return Graph::from_edges(1, edges);
}

Graph torus_graph(int dim, int side) {
  if (dim < 1) throw std::invalid_argument("torus dimension must be positive");
  if (side < 3) {
    throw std::invalid_argument("torus side must be at least 3");
  }
  int n = 1;
  for (int j = 0; j < dim; ++j) {
    if (n > (1 << 22) / side) throw std::invalid_argument("torus too large");
    n *= side;
  }
  const int m = 2 * dim * n;
  std::vector<std::pair<int, int>> endpoints(m);
  std::vector<int> inv(m);
  for (int v = 0; v < n; ++v) {
    const std::vector<int> x = lattice_point(v, dim, side);
    for (int j = 1; j <= dim; ++j) {
      const int a_plus = lattice_arc(x, j, +1, side);
      const int a_minus = lattice_arc(x, j, -1, side);
      endpoints[a_plus] = {lattice_vertex(shifted(x, j, -1, side), side), v};
      endpoints[a_minus] = {lattice_vertex(shifted(x, j, +1, side), side), v};
      inv[a_plus] = lattice_arc(shifted(x, j, -1, side), j, -1, side);
      inv[a_minus] = lattice_arc(shifted(x, j, +1, side), j, +1, side);
    }
  }
  return Graph(n, std::move(endpoints), std::move(inv));
}

ArcPermutation::ArcPermutation(std::vector<int> images)
    : images_(std::move(images)) {
  std::vector<char> hit(images_.size(), 0);
  for (int im : images_) {
    if (im < 0 || im >= static_cast<int>(images_.size()) || hit[im]) {
      throw std::invalid_argument("arc permutation is not a bijection");
    }
    hit[im] = 1;
  }
}

ArcPermutation flip_flop_permutation(const Graph& g) {
  std::vector<int> images(g.num_arcs());
  for (int a = 0; a < g.num_arcs(); ++a) images[a] = g.inverse(a);
  return ArcPermutation(std::move(images));
}

ArcPermutation moving_shift_permutation(int dim, int side) {
  if (dim < 1 || side < 3) throw std::invalid_argument("invalid torus parameters");
  int n = 1;
  for (int j = 0; j < dim; ++j) n *= side;
  std::vector<int> images(2 * dim * n);
  for (int v = 0; v < n; ++v) {
    const std::vector<int> x = lattice_point(v, dim, side);
    for (int j = 1; j <= dim; ++j) {
      for (int eps : {+1, -1}) {
        images[lattice_arc(x, j, eps, side)] =
            lattice_arc(shifted(x, j, eps, side), j, eps, side);
      }
    }
  }
  return ArcPermutation(std::move(images));
}

void validate_shift_permutation(const Graph& g, const ArcPermutation& pi) {
  if (pi.size() != g.num_arcs()) {
    throw std::invalid_argument("permutation size does not match arc count");
  }
  for (int a = 0; a < g.num_arcs(); ++a) {
    if (g.origin(pi(a)) != g.terminus(a)) {
      throw std::invalid_argument(
          "arc " + std::to_string(a) +
          ": image does not leave the terminus (origin(pi(a)) != terminus(a))");
    }
  }
}

}  // namespace qwalk
