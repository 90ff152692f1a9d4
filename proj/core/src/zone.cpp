#include "tope/zone.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace tope {

Graph zone_graph(const Graph& g, const ThetaPartition& theta, std::span<const ConvexCycle> cycles, std::size_t cls) {
  if (cls >= theta.class_count || theta.edges_of_class[cls].empty())
    throw std::out_of_range("theta class " + std::to_string(cls) + " does not exist");
  const auto& members = theta.edges_of_class[cls];
  auto local = [&](EdgeId id) {
    return static_cast<Vertex>(std::lower_bound(members.begin(), members.end(), id) - members.begin());
  };

  std::vector<Edge> adjacency;
  for (const auto& cycle : cycles) {
    const auto v = cycle.vertices();
    const std::size_t n = v.size(), half = n / 2;
    for (std::size_t i = 0; i < half; ++i) {
      auto a = g.edge_id(v[i], v[(i + 1) % n]);
      auto b = g.edge_id(v[i + half], v[(i + half + 1) % n]);
      if (!a || !b) throw std::invalid_argument("cycle uses a non-edge");
      if (theta.class_of_edge[*a] == cls && theta.class_of_edge[*b] == cls) {
        Vertex x = local(*a), y = local(*b);
        adjacency.push_back(Edge{std::min(x, y), std::max(x, y)});
      }
    }
  }
  std::sort(adjacency.begin(), adjacency.end());
  adjacency.erase(std::unique(adjacency.begin(), adjacency.end()), adjacency.end());
  std::string name = g.name().empty() ? "zone" : "zone(" + g.name() + "," + std::to_string(cls) + ")";
  return Graph(members.size(), adjacency, std::move(name));
}

std::pair<Graph, std::vector<Vertex>> contract_theta_class(const Graph& g, const ThetaPartition& theta,
                                                           std::size_t cls) {
  if (cls >= theta.class_count) throw std::out_of_range("theta class out of range");
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> rep(n);
  std::iota(rep.begin(), rep.end(), 0);
  // Class edges form a perfect matching between the two sides in a partial cube.
  for (EdgeId id : theta.edges_of_class[cls]) {
    const Edge& e = g.edge(id);
    rep[e.v] = rep[e.u] = std::min(rep[e.u], rep[e.v]);
  }
  constexpr Vertex unset = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> index(n, unset), map(n);
  Vertex next = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (index[rep[v]] == unset) index[rep[v]] = next++;
    map[v] = index[rep[v]];
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = map[e.u], b = map[e.v];
    if (a != b) edges.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return {Graph(next, edges, g.name().empty() ? "" : g.name() + "/" + std::to_string(cls)), std::move(map)};
}

}  // namespace tope
