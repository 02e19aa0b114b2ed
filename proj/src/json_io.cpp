#include "qwalk/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace qwalk {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex values are [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json open_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace

Graph graph_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) {
      throw std::invalid_argument("edges are [u, v] pairs");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph::from_edges(n, edges);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (int a = 0; a < g.num_arcs(); ++a) {
    if (a < g.inverse(a)) {
      edges.push_back(json::array({g.origin(a), g.terminus(a)}));
    }
  }
  return json{{"n", g.num_vertices()}, {"edges", edges}};
}

Graph load_graph(const std::string& path) {
  return graph_from_json(open_json(path));
}

CoinAssignment coins_from_json(const json& j, const Graph& g) {
  const std::string kind = j.at("kind").get<std::string>();
  CoinAssignment coins;
  if (kind == "grover") {
    coins = grover_coins(g);
  } else if (kind == "moving_grover") {
    coins = moving_shift_coins(g, CoinConvention::CaseI);
  } else if (kind == "custom") {
    if (!j.contains("matrices")) {
      throw std::invalid_argument("custom coins need per-vertex matrices");
    }
    const auto& mats = j.at("matrices");
    if (static_cast<int>(mats.size()) != g.num_vertices()) {
      throw std::invalid_argument("matrix count does not match vertex count");
    }
    for (int u = 0; u < g.num_vertices(); ++u) {
      const auto& rows = mats[u];
      const int d = g.degree(u);
      if (static_cast<int>(rows.size()) != d) {
        throw std::invalid_argument("matrix at vertex " + std::to_string(u) +
                                    " does not match its degree");
      }
      MatrixXcd m(d, d);
      for (int r = 0; r < d; ++r) {
        if (static_cast<int>(rows[r].size()) != d) {
          throw std::invalid_argument("ragged coin matrix at vertex " +
                                      std::to_string(u));
        }
        for (int c = 0; c < d; ++c) m(r, c) = complex_from_json(rows[r][c]);
      }
      coins.coin.push_back(std::move(m));
    }
    if (!j.contains("kappa") || !j.contains("kappa_prime") || !j.contains("p")) {
      throw std::invalid_argument(
          "custom coins need kappa, kappa_prime and p");
    }
  } else {
    throw std::invalid_argument("unknown coin kind: " + kind);
  }
  if (j.contains("kappa")) coins.kappa = complex_from_json(j.at("kappa"));
  if (j.contains("kappa_prime")) {
    coins.kappa_prime = complex_from_json(j.at("kappa_prime"));
  }
  if (j.contains("p")) coins.multiplicity = j.at("p").get<int>();
  return coins;
}

CoinAssignment load_coins(const std::string& path, const Graph& g) {
  return coins_from_json(open_json(path), g);
}

json report_to_json(const SpectrumReport& report) {
  json t_spec = json::array();
  for (const auto& c : report.t_spectrum) {
    t_spec.push_back(json{{"mu", c.mu}, {"mult", c.multiplicity}});
  }
  json lifted = json::array();
  for (const auto& l : report.lifted) {
    json lambdas = json::array();
    for (const Complex& lam : l.pair.lambdas) lambdas.push_back(complex_to_json(lam));
    lifted.push_back(json{{"mu", l.pair.mu},
                          {"mult", l.multiplicity},
                          {"lambdas", lambdas}});
  }
  return json{
      {"kappa", complex_to_json(report.kappa)},
      {"kappa_prime", complex_to_json(report.kappa_prime)},
      {"p", report.multiplicity},
      {"t_spectrum", t_spec},
      {"lifted", lifted},
      {"residual",
       {{"plus_kp", report.residual_plus}, {"minus_kp", report.residual_minus}}},
      {"ledger",
       {{"m_plus", report.ledger.m_plus},
        {"m_minus", report.ledger.m_minus},
        {"dim_L", report.ledger.dim_inherited},
        {"dim_L_perp", report.ledger.dim_residual},
        {"dim_O_cap_T", report.ledger.dim_overlap}}},
      {"max_lift_residual", report.max_lift_residual},
      {"oracle_delta", report.oracle_delta},
  };
}

}  // namespace qwalk
