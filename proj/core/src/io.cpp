#include "tope/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tope {

using nlohmann::json;
using nlohmann::ordered_json;

Graph parse_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed graph document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw ParseError("graph document needs keys \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
    throw ParseError("\"n\" must be a positive integer");
  const auto n = doc["n"].get<long long>();
  if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");

  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
      throw ParseError("each edge must be a pair of integers");
    const auto u = e[0].get<long long>(), v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge endpoint out of range");
    edges.push_back(Edge{static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw ParseError("\"name\" must be a string");
    name = doc["name"].get<std::string>();
  }
  try {
    return Graph(static_cast<std::size_t>(n), edges, std::move(name));
  } catch (const GraphError& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_graph(const Graph& g) {
  ordered_json doc;
  doc["name"] = g.name();
  doc["n"] = g.vertex_count();
  doc["edges"] = ordered_json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump() + "\n";
}

SignSystem parse_system(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::size_t> ground;
  std::vector<std::string> names;
  std::vector<SignVector> covectors;
  std::set<std::string> seen;
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (!ground) {
      std::istringstream head(line);
      std::string keyword;
      long long k = -1;
      std::string rest;
      if (!(head >> keyword >> k) || keyword != "ground" || k < 1 || (head >> rest))
        fail("expected header \"ground <k>\" with k >= 1");
      ground = static_cast<std::size_t>(k);
      continue;
    }
    if (line.starts_with("elements")) {
      if (!covectors.empty() || !names.empty()) fail("\"elements\" must precede the covectors");
      std::istringstream row(line.substr(8));
      std::string name;
      while (row >> name) names.push_back(name);
      if (names.size() != *ground) fail("element name count differs from ground size");
      continue;
    }
    if (line.size() != *ground)
      fail("covector has length " + std::to_string(line.size()) + ", expected " + std::to_string(*ground));
    SignVector x;
    try {
      x = SignVector::parse(line);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
    if (!seen.insert(line).second) fail("duplicate covector " + line);
    covectors.push_back(std::move(x));
  }
  if (!ground) throw ParseError("missing \"ground <k>\" header");
  return SignSystem(*ground, std::move(covectors), std::move(names));
}

std::string serialize_system(const SignSystem& s) {
  std::string out = "ground " + std::to_string(s.ground_size()) + "\n";
  if (!s.element_names().empty()) {
    out += "elements";
    for (const auto& n : s.element_names()) out += " " + n;
    out += "\n";
  }
  for (const auto& x : s.covectors()) out += x.to_string() + "\n";
  return out;
}

// --- witnesses ---------------------------------------------------------------------

json witness_json(const ConvexityWitness& w) { return json{{"u", w.u}, {"v", w.v}, {"x", w.x}}; }

json witness_json(const Recognition& r) {
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PartialCube>) {
          return json{{"kind", "PartialCube"}, {"classes", v.theta.class_count}};
        } else if constexpr (std::is_same_v<T, NotBipartite>) {
          return json{{"kind", "NotBipartite"}, {"odd_walk", v.odd_walk}};
        } else {
          return json{{"kind", "NotPartialCube"},
                      {"edge", {v.edge.u, v.edge.v}},
                      {"theta_class", v.theta_class},
                      {"convexity_witness", witness_json(v.witness)}};
        }
      },
      r);
}

json witness_json(const CycleConditionWitness& w) {
  return json{{"u", w.u}, {"x", w.x}, {"y", w.y}, {"z", w.z}};
}

json witness_json(const CycleIntersectionWitness& w, std::span<const ConvexCycle> cycles) {
  auto cyc = [&](std::size_t i) {
    const auto v = cycles[i].vertices();
    return std::vector<Vertex>(v.begin(), v.end());
  };
  return json{{"first_cycle", cyc(w.first)}, {"second_cycle", cyc(w.second)}, {"shared", w.shared}};
}

json witness_json(const MediangleVerdict& v) {
  if (v.is_mediangle) return nullptr;
  json out{{"failed_condition", std::string(to_string(*v.failed_condition))}};
  if (auto* w = std::get_if<CycleConditionWitness>(&v.witness)) out["witness"] = witness_json(*w);
  if (auto* w = std::get_if<CycleIntersectionWitness>(&v.witness)) out["witness"] = witness_json(*w, v.cycles);
  if (auto* w = std::get_if<Recognition>(&v.witness)) out["witness"] = witness_json(*w);
  return out;
}

json witness_json(const ApiculateWitness& w) {
  return json{{"u", w.u}, {"x", w.x}, {"y", w.y}, {"apices", {w.first_apex, w.second_apex}}};
}

json witness_json(const AxiomReport& report, const SignSystem& s) {
  json out = json::object();
  if (report.not_simple) out["not_simple_element"] = *report.not_simple;
  if (report.face_symmetry) {
    const auto& [x, y] = *report.face_symmetry;
    out["face_symmetry"] = {{"X", s[x].to_string()}, {"Y", s[y].to_string()},
                            {"missing", compose(s[x], -s[y]).to_string()}};
  }
  if (report.strong_elimination) {
    const auto& [x, y, e] = *report.strong_elimination;
    out["strong_elimination"] = {{"X", s[x].to_string()}, {"Y", s[y].to_string()}, {"element", e}};
  }
  if (!report.has_zero) out["missing_zero"] = SignVector(s.ground_size()).to_string();
  return out;
}

}  // namespace tope
