#pragma once

#include <optional>

#include "tope/graph.hpp"

namespace tope {

/// v ≼_u w  iff  v ∈ interval(u, w).
inline bool precedes(const Graph& g, Vertex u, Vertex v, Vertex w) { return between(g, u, v, w); }

/// Maximal elements of interval(u,x) ∩ interval(u,y) under ≼_u (the u-apices).
struct ApexResult {
  Vertex basepoint;
  Vertex x;
  Vertex y;
  VertexSet apices;
};

ApexResult u_apices(const Graph& g, Vertex u, Vertex x, Vertex y);

/// Least triple (u, x, y), x < y, whose u-apex is not unique, with the two
/// smallest incomparable apices.
struct ApiculateWitness {
  Vertex u;
  Vertex x;
  Vertex y;
  Vertex first_apex;
  Vertex second_apex;
  friend bool operator==(const ApiculateWitness&, const ApiculateWitness&) = default;
};

/// nullopt iff every base-point order is a meet-semilattice.
std::optional<ApiculateWitness> apiculate_violation(const Graph& g);
inline bool is_apiculate(const Graph& g) { return !apiculate_violation(g); }

/// Meet-semilattice at u with a global maximum ū (V = interval(u, ū)).
bool is_lattice_at(const Graph& g, Vertex u);

/// Re-checks a witness from scratch: both apices lie in the intersection,
/// neither precedes the other, and nothing in the intersection lies strictly above either.
bool revalidate(const Graph& g, const ApiculateWitness& w);

}  // namespace tope
