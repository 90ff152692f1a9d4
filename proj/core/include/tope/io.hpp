#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "tope/basepoint_order.hpp"
#include "tope/graph.hpp"
#include "tope/mediangle.hpp"
#include "tope/partial_cube.hpp"
#include "tope/sign_system.hpp"

namespace tope {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// GraphFile: {"name": str, "n": int, "edges": [[u, v], ...]}.
/// Construction failures (self-loop, disconnected, ...) surface as ParseError.
Graph parse_graph(std::string_view text);
/// Canonical form: keys name, n, edges; edges sorted with u < v; trailing newline.
std::string serialize_graph(const Graph& g);

/// SignSystemFile: "ground k", optional "elements a b ...", then one covector
/// per line over {+,-,0}. Blank lines are ignored; duplicates are rejected.
SignSystem parse_system(std::string_view text);
/// Canonical (sorted) covector order.
std::string serialize_system(const SignSystem& s);

nlohmann::json witness_json(const ConvexityWitness& w);
nlohmann::json witness_json(const Recognition& r);
nlohmann::json witness_json(const CycleConditionWitness& w);
nlohmann::json witness_json(const CycleIntersectionWitness& w, std::span<const ConvexCycle> cycles);
nlohmann::json witness_json(const MediangleVerdict& v);
nlohmann::json witness_json(const ApiculateWitness& w);
nlohmann::json witness_json(const AxiomReport& report, const SignSystem& s);

}  // namespace tope
