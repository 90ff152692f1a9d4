#pragma once

#include <cstdint>
#include <utility>
#include <variant>
#include <vector>

#include "tope/graph.hpp"

namespace tope {

/// Djoković–Winkler Θ-classes of a partial cube with their halfspace pairs.
///
/// Classes are numbered by their smallest edge id. For every class the first
/// halfspace (the positive side) contains `orientation_root`.
struct ThetaPartition {
  std::size_t class_count = 0;
  std::vector<std::uint32_t> class_of_edge;           // indexed by EdgeId
  std::vector<std::vector<EdgeId>> edges_of_class;    // sorted
  std::vector<std::pair<VertexSet, VertexSet>> halfspaces;  // (positive, negative)
  Vertex orientation_root = 0;

  /// +1 iff v lies in the halfspace containing the root, else -1.
  int side(std::size_t cls, Vertex v) const;
};

/// Hypercube coordinates; bit c is 1 iff the vertex is on the negative side of class c.
struct CubeEmbedding {
  std::vector<std::vector<std::uint8_t>> coords;
  int hamming(Vertex u, Vertex v) const;
};

struct PartialCube {
  ThetaPartition theta;
  CubeEmbedding embedding;
};

/// Closed walk of odd length; first vertex repeated at the end.
struct NotBipartite {
  std::vector<Vertex> odd_walk;
};

/// The halfspace W(edge.u, edge.v) (or its complement) fails convexity at `witness`.
struct NotPartialCube {
  Edge edge;
  std::size_t theta_class;
  ConvexityWitness witness;
};

using Recognition = std::variant<PartialCube, NotBipartite, NotPartialCube>;

Recognition recognize_partial_cube(const Graph& g, Vertex root = 0);

/// Convenience: the Θ-partition, or std::invalid_argument when g is not a partial cube.
ThetaPartition require_partial_cube(const Graph& g, Vertex root = 0);

int halfspace_side(const ThetaPartition& theta, std::size_t cls, Vertex v);

/// An induced convex cycle, stored in cyclic order starting at its smallest
/// vertex and continuing toward that vertex's smaller cycle neighbour.
class ConvexCycle {
 public:
  explicit ConvexCycle(std::vector<Vertex> cyclic_order);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t length() const { return vertices_.size(); }
  /// Vertices sorted ascending.
  std::span<const Vertex> members() const { return sorted_; }

  bool contains(Vertex v) const;
  /// Position of v in the cyclic order; v must be on the cycle.
  std::size_t position(Vertex v) const;
  Vertex opposite(Vertex v) const;
  bool has_edge(Vertex a, Vertex b) const;

  friend bool operator==(const ConvexCycle& a, const ConvexCycle& b) { return a.sorted_ == b.sorted_; }
  friend bool operator<(const ConvexCycle& a, const ConvexCycle& b) { return a.sorted_ < b.sorted_; }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Vertex> sorted_;
};

/// Every convex cycle of a partial cube exactly once, sorted by member list.
/// A convex cycle equals the interval between any two of its opposite vertices,
/// so the candidates are the intervals interval(v, w).
std::vector<ConvexCycle> enumerate_convex_cycles(const Graph& g, const ThetaPartition& theta);

/// If `s` induces a single cycle (every member has exactly two neighbours in s
/// and s is connected), returns it in canonical cyclic order.
std::optional<std::vector<Vertex>> induced_cycle_order(const Graph& g, const VertexSet& s);

}  // namespace tope
