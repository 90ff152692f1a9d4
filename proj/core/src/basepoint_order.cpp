#include "tope/basepoint_order.hpp"

#include <vector>

namespace tope {

namespace {

// Unique apex of I = [u,x] ∩ [u,y] if it exists: the farthest member from u
// must be unique and lie above every other member.
std::optional<Vertex> unique_apex(const Graph& g, Vertex u, Vertex x, Vertex y) {
  const std::size_t n = g.vertex_count();
  std::optional<Vertex> top;
  bool tie = false;
  for (Vertex v = 0; v < n; ++v) {
    if (!between(g, u, v, x) || !between(g, u, v, y)) continue;
    if (!top || g.distance(u, v) > g.distance(u, *top)) {
      top = v;
      tie = false;
    } else if (g.distance(u, v) == g.distance(u, *top)) {
      tie = true;
    }
  }
  if (tie) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (between(g, u, v, x) && between(g, u, v, y) && !precedes(g, u, v, *top)) return std::nullopt;
  return top;
}

}  // namespace

ApexResult u_apices(const Graph& g, Vertex u, Vertex x, Vertex y) {
  g.require_vertex(u);
  g.require_vertex(x);
  g.require_vertex(y);
  std::vector<Vertex> common;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (between(g, u, v, x) && between(g, u, v, y)) common.push_back(v);

  ApexResult result{u, x, y, VertexSet(g.vertex_count())};
  for (Vertex a : common) {
    bool maximal = true;
    for (Vertex b : common) {
      if (b != a && precedes(g, u, a, b)) {
        maximal = false;
        break;
      }
    }
    if (maximal) result.apices.insert(a);
  }
  return result;
}

std::optional<ApiculateWitness> apiculate_violation(const Graph& g) {
  const std::size_t n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        if (unique_apex(g, u, x, y)) continue;
        auto apices = u_apices(g, u, x, y).apices.members();
        return ApiculateWitness{u, x, y, apices.at(0), apices.at(1)};
      }
    }
  }
  return std::nullopt;
}

bool is_lattice_at(const Graph& g, Vertex u) {
  g.require_vertex(u);
  const std::size_t n = g.vertex_count();
  bool has_max = false;
  for (Vertex top = 0; top < n && !has_max; ++top) {
    bool all_below = true;
    for (Vertex v = 0; v < n && all_below; ++v) all_below = precedes(g, u, v, top);
    has_max = all_below;
  }
  if (!has_max) return false;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (!unique_apex(g, u, x, y)) return false;
  return true;
}

bool revalidate(const Graph& g, const ApiculateWitness& w) {
  for (Vertex v : {w.u, w.x, w.y, w.first_apex, w.second_apex})
    if (!g.valid(v)) return false;
  auto in_common = [&](Vertex v) { return between(g, w.u, v, w.x) && between(g, w.u, v, w.y); };
  if (w.first_apex == w.second_apex || !in_common(w.first_apex) || !in_common(w.second_apex)) return false;
  if (precedes(g, w.u, w.first_apex, w.second_apex) || precedes(g, w.u, w.second_apex, w.first_apex))
    return false;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!in_common(v)) continue;
    for (Vertex a : {w.first_apex, w.second_apex})
      if (v != a && precedes(g, w.u, a, v)) return false;
  }
  return true;
}

}  // namespace tope
