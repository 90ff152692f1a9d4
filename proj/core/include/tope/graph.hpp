#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace tope {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// Raised when a graph violates the construction invariants
/// (self-loop, multi-edge, disconnected, endpoint out of range).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense membership vector over the vertices of a fixed graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : bits_(universe, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);
  VertexSet(std::size_t universe, std::span<const Vertex> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const { return v < bits_.size() && bits_[v] != 0; }
  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<Vertex> members() const;
  /// Smallest member; the set must be non-empty.
  Vertex front() const;

  bool is_subset_of(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  VertexSet complement() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.bits_ == b.bits_; }
  /// Lexicographic on sorted member lists; used for canonical output order.
  friend bool operator<(const VertexSet& a, const VertexSet& b);

 private:
  std::vector<std::uint8_t> bits_;
  std::size_t count_ = 0;
};

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple connected undirected graph with an all-pairs hop-distance
/// table computed at construction. Immutable afterwards.
class Graph {
 public:
  Graph(std::size_t vertex_count, std::span<const Edge> edges, std::string name = {});
  Graph(std::size_t vertex_count, std::initializer_list<Edge> edges, std::string name = {})
      : Graph(vertex_count, std::span<const Edge>(edges.begin(), edges.size()), std::move(name)) {}

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges in canonical order: u < v, sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;

  int distance(Vertex u, Vertex v) const {
    return dist_[static_cast<std::size_t>(u) * adjacency_.size() + v];
  }
  int diameter() const;

  bool valid(Vertex v) const { return v < adjacency_.size(); }
  void require_vertex(Vertex v) const;

  /// Subgraph induced by `s`; vertices renumbered in increasing order.
  /// Throws GraphError if the induced subgraph is disconnected.
  Graph induced(const VertexSet& s) const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<EdgeId>> incident_;
  std::vector<Edge> edges_;
  std::vector<int> dist_;
  std::string name_;
};

// --- metric primitives ---------------------------------------------------

/// True iff x lies on a shortest (u,v)-path.
inline bool between(const Graph& g, Vertex u, Vertex x, Vertex v) {
  return g.distance(u, x) + g.distance(x, v) == g.distance(u, v);
}

VertexSet interval(const Graph& g, Vertex u, Vertex v);

/// Inclusion-minimal convex superset, by closing under intervals.
VertexSet convex_hull(const Graph& g, const VertexSet& s);

/// x lies in interval(u, v) but not in the tested set.
struct ConvexityWitness {
  Vertex u;
  Vertex v;
  Vertex x;
  friend bool operator==(const ConvexityWitness&, const ConvexityWitness&) = default;
};

/// nullopt when `s` is convex, otherwise the lexicographically least witness.
std::optional<ConvexityWitness> convexity_violation(const Graph& g, const VertexSet& s);
inline bool is_convex(const Graph& g, const VertexSet& s) { return !convexity_violation(g, s); }

/// Imp(u, s) = {x in s : interval(u, x) ∩ s = {x}}.
VertexSet imprint(const Graph& g, Vertex u, const VertexSet& s);

struct Gate {
  Vertex vertex;
};
struct NotGatedHere {
  VertexSet imprint;
};
using GateResult = std::variant<Gate, NotGatedHere>;

GateResult gate(const Graph& g, Vertex u, const VertexSet& s);

/// Gate of u in s if one exists: the nearest member lying between u and all of s.
/// Equivalent to `gate` but O(|s|) per call; no imprint is materialised.
std::optional<Vertex> find_gate(const Graph& g, Vertex u, const VertexSet& s);

/// nullopt when `s` is gated, otherwise the least outside vertex without a gate.
std::optional<Vertex> gatedness_violation(const Graph& g, const VertexSet& s);
inline bool is_gated(const Graph& g, const VertexSet& s) { return !gatedness_violation(g, s); }

}  // namespace tope
