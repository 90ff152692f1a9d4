#pragma once

#include <span>

#include "tope/graph.hpp"
#include "tope/partial_cube.hpp"

namespace tope {

/// Zone graph of Θ-class `cls`: one vertex per edge of the class (in edge-id
/// order), two adjacent iff they are opposite edges of a common convex cycle.
/// `cycles` must be the complete convex-cycle list.
Graph zone_graph(const Graph& g, const ThetaPartition& theta, std::span<const ConvexCycle> cycles, std::size_t cls);

/// g with every edge of Θ-class `cls` contracted; vertices are numbered by
/// first occurrence in vertex order. Returns the graph and the vertex map.
std::pair<Graph, std::vector<Vertex>> contract_theta_class(const Graph& g, const ThetaPartition& theta, std::size_t cls);

}  // namespace tope
