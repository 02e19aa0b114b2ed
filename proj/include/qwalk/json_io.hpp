#pragma once

#include <iosfwd>
#include <string>

#include "qwalk/json.hpp"

#include "qwalk/coins.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/spectral_lift.hpp"

namespace qwalk {

/// {"n": int, "edges": [[u, v], ...]}; arc order in the file is the
/// from_edges order.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);
Graph load_graph(const std::string& path);

/// {"kind": "grover" | "moving_grover" | "custom",
///  "kappa": [re, im], "kappa_prime": [re, im], "p": int,
///  "matrices": [[[re, im], ...], ...] per vertex (custom only)}.
/// grover defaults to the (1, -1, 1) certificate; moving_grover to
/// (-1, 1, d-1); explicit fields override.
CoinAssignment coins_from_json(const nlohmann::json& j, const Graph& g);
CoinAssignment load_coins(const std::string& path, const Graph& g);

nlohmann::json report_to_json(const SpectrumReport& report);

}  // namespace qwalk
