#include "tope/mediangle.hpp"

#include <algorithm>
#include <map>

namespace tope {

std::string_view to_string(MediangleFailure f) {
  switch (f) {
    case MediangleFailure::CycleCondition: return "CycleCondition";
    case MediangleFailure::CycleIntersection: return "CycleIntersection";
    case MediangleFailure::NotPartialCube: return "NotPartialCube";
  }
  return "?";
}

namespace {

// Cycles through the 2-path x - z - y, keyed by (z, x, y) with x < y.
using ForkIndex = std::map<std::tuple<Vertex, Vertex, Vertex>, std::vector<std::size_t>>;

ForkIndex index_forks(std::span<const ConvexCycle> cycles) {
  ForkIndex forks;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    const auto verts = cycles[c].vertices();
    const std::size_t n = verts.size();
    for (std::size_t i = 0; i < n; ++i) {
      Vertex z = verts[i];
      Vertex a = verts[(i + 1) % n];
      Vertex b = verts[(i + n - 1) % n];
      forks[{z, std::min(a, b), std::max(a, b)}].push_back(c);
    }
  }
  return forks;
}

bool closes(const Graph& g, const ConvexCycle& c, Vertex u, Vertex x, Vertex y, Vertex z) {
  Vertex top = c.opposite(z);
  return between(g, u, top, x) && between(g, u, top, y);
}

}  // namespace

std::optional<CycleConditionWitness> check_cycle_condition(const Graph& g, std::span<const ConvexCycle> cycles) {
  const ForkIndex forks = index_forks(cycles);
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> down;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex z = 0; z < n; ++z) {
      const int dz = g.distance(u, z);
      if (dz < 2) continue;
      down.clear();
      for (Vertex w : g.neighbors(z))
        if (g.distance(u, w) == dz - 1) down.push_back(w);
      for (std::size_t i = 0; i < down.size(); ++i) {
        for (std::size_t j = i + 1; j < down.size(); ++j) {
          const Vertex x = down[i], y = down[j];
          bool ok = false;
          if (auto it = forks.find({z, x, y}); it != forks.end())
            ok = std::any_of(it->second.begin(), it->second.end(),
                             [&](std::size_t c) { return closes(g, cycles[c], u, x, y, z); });
          if (!ok) return CycleConditionWitness{u, x, y, z};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<CycleIntersectionWitness> check_cycle_intersections(std::span<const ConvexCycle> cycles) {
  std::vector<Vertex> shared;
  for (std::size_t a = 0; a < cycles.size(); ++a) {
    for (std::size_t b = a + 1; b < cycles.size(); ++b) {
      shared.clear();
      const auto ma = cycles[a].members();
      const auto mb = cycles[b].members();
      std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(shared));
      const bool fine = shared.size() <= 1 ||
                        (shared.size() == 2 && cycles[a].has_edge(shared[0], shared[1]) &&
                         cycles[b].has_edge(shared[0], shared[1]));
      if (!fine) return CycleIntersectionWitness{a, b, shared};
    }
  }
  return std::nullopt;
}

MediangleVerdict is_bipartite_mediangle(const Graph& g) {
  MediangleVerdict verdict;
  auto recognition = recognize_partial_cube(g);
  auto* pc = std::get_if<PartialCube>(&recognition);
  if (pc == nullptr) {
    verdict.failed_condition = MediangleFailure::NotPartialCube;
    verdict.witness = std::move(recognition);
    return verdict;
  }
  verdict.cycles = enumerate_convex_cycles(g, pc->theta);
  if (auto w = check_cycle_intersections(verdict.cycles)) {
    verdict.failed_condition = MediangleFailure::CycleIntersection;
    verdict.witness = std::move(*w);
    return verdict;
  }
  if (auto w = check_cycle_condition(g, verdict.cycles)) {
    verdict.failed_condition = MediangleFailure::CycleCondition;
    verdict.witness = *w;
    return verdict;
  }
  verdict.is_mediangle = true;
  return verdict;
}

bool revalidate(const Graph& g, const CycleConditionWitness& w) {
  const auto [u, x, y, z] = w;
  if (!g.valid(u) || !g.valid(x) || !g.valid(y) || !g.valid(z) || x == y) return false;
  if (!g.adjacent(z, x) || !g.adjacent(z, y)) return false;
  const int dz = g.distance(u, z);
  if (g.distance(u, x) != dz - 1 || g.distance(u, y) != dz - 1) return false;

  // Any convex cycle through x - z - y contains the interval between z and its
  // opposite vertex t, which must equal the whole cycle; so try every t.
  for (Vertex t = 0; t < g.vertex_count(); ++t) {
    if (!between(g, u, t, x) || !between(g, u, t, y)) continue;
    VertexSet iv = interval(g, z, t);
    if (!iv.contains(x) || !iv.contains(y)) continue;
    auto order = induced_cycle_order(g, iv);
    if (!order || order->size() != static_cast<std::size_t>(2 * g.distance(z, t))) continue;
    if (is_convex(g, iv)) return false;
  }
  return true;
}

}  // namespace tope
