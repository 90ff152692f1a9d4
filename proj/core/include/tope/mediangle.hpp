#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "tope/graph.hpp"
#include "tope/partial_cube.hpp"

namespace tope {

/// Fork (x, z, y) pointing toward u that no convex cycle closes below x and y.
struct CycleConditionWitness {
  Vertex u;
  Vertex x;
  Vertex y;
  Vertex z;
  friend bool operator==(const CycleConditionWitness&, const CycleConditionWitness&) = default;
};

/// Two convex cycles (indices into the cycle list) sharing more than one edge.
struct CycleIntersectionWitness {
  std::size_t first;
  std::size_t second;
  std::vector<Vertex> shared;
};

enum class MediangleFailure { CycleCondition, CycleIntersection, NotPartialCube };

std::string_view to_string(MediangleFailure f);

struct MediangleVerdict {
  bool is_mediangle = false;
  std::optional<MediangleFailure> failed_condition;
  std::variant<std::monostate, CycleConditionWitness, CycleIntersectionWitness, Recognition> witness;
  /// Convex cycles found (empty when recognition failed). Cycle-intersection
  /// witnesses index into this list.
  std::vector<ConvexCycle> cycles;
};

/// Checks the cycle condition for every (u, z) and every pair of neighbours
/// x < y of z one step closer to u. Returns the least failing (u, z, x, y).
/// `cycles` must be the complete convex-cycle list of the partial cube g.
std::optional<CycleConditionWitness> check_cycle_condition(const Graph& g, std::span<const ConvexCycle> cycles);

/// Every pair of distinct cycles must share nothing, a vertex, or one edge.
std::optional<CycleIntersectionWitness> check_cycle_intersections(std::span<const ConvexCycle> cycles);

MediangleVerdict is_bipartite_mediangle(const Graph& g);

/// Re-checks a cycle-condition witness against the raw definition, using an
/// independently computed convex-cycle list.
bool revalidate(const Graph& g, const CycleConditionWitness& w);

}  // namespace tope
