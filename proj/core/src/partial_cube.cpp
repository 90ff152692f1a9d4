#include "tope/partial_cube.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tope {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Shortest path from v down to root, choosing the smallest predecessor each step.
std::vector<Vertex> path_to_root(const Graph& g, Vertex root, Vertex v) {
  std::vector<Vertex> path{v};
  while (v != root) {
    for (Vertex w : g.neighbors(v)) {
      if (g.distance(root, w) + 1 == g.distance(root, v)) {
        v = w;
        break;
      }
    }
    path.push_back(v);
  }
  return path;
}

// W(u,v) = {x : d(x,u) < d(x,v)}.
VertexSet closer_to(const Graph& g, Vertex u, Vertex v) {
  VertexSet w(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (g.distance(x, u) < g.distance(x, v)) w.insert(x);
  return w;
}

}  // namespace

int ThetaPartition::side(std::size_t cls, Vertex v) const {
  if (cls >= class_count) throw std::out_of_range("theta class out of range");
  const auto& pos = halfspaces[cls].first;
  if (v >= pos.universe()) throw std::out_of_range("vertex out of range");
  return pos.contains(v) ? +1 : -1;
}

int halfspace_side(const ThetaPartition& theta, std::size_t cls, Vertex v) { return theta.side(cls, v); }

int CubeEmbedding::hamming(Vertex u, Vertex v) const {
  const auto& a = coords.at(u);
  const auto& b = coords.at(v);
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

Recognition recognize_partial_cube(const Graph& g, Vertex root) {
  g.require_vertex(root);

  for (const Edge& e : g.edges()) {
    if (g.distance(root, e.u) == g.distance(root, e.v)) {
      auto walk = path_to_root(g, root, e.u);
      std::reverse(walk.begin(), walk.end());
      auto back = path_to_root(g, root, e.v);
      walk.insert(walk.end(), back.begin(), back.end());
      return NotBipartite{std::move(walk)};
    }
  }

  const auto edges = g.edges();
  const std::size_t m = edges.size();
  UnionFind uf(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Edge& a = edges[i];
    for (std::size_t j = i + 1; j < m; ++j) {
      const Edge& b = edges[j];
      if (g.distance(a.u, b.u) + g.distance(a.v, b.v) != g.distance(a.u, b.v) + g.distance(a.v, b.u))
        uf.unite(i, j);
    }
  }

  ThetaPartition theta;
  theta.orientation_root = root;
  theta.class_of_edge.assign(m, 0);
  std::vector<std::size_t> class_of_rep(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t rep = uf.find(i);
    if (class_of_rep[rep] == m) {
      class_of_rep[rep] = theta.class_count++;
      theta.edges_of_class.emplace_back();
    }
    theta.class_of_edge[i] = static_cast<std::uint32_t>(class_of_rep[rep]);
    theta.edges_of_class[class_of_rep[rep]].push_back(static_cast<EdgeId>(i));
  }

  auto non_convex_side = [&](std::size_t cls, const Edge& e) -> std::optional<NotPartialCube> {
    for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
      if (auto w = convexity_violation(g, closer_to(g, a, b)))
        return NotPartialCube{Edge{a, b}, cls, *w};
    }
    return std::nullopt;
  };

  for (std::size_t cls = 0; cls < theta.class_count; ++cls) {
    const Edge& rep = edges[theta.edges_of_class[cls].front()];
    VertexSet side_u = closer_to(g, rep.u, rep.v);
    bool consistent = true;
    for (EdgeId id : theta.edges_of_class[cls]) {
      const Edge& e = edges[id];
      VertexSet w = closer_to(g, e.u, e.v);
      if (!(w == side_u || w == side_u.complement())) {
        consistent = false;
        break;
      }
    }
    if (!consistent) {
      // Θ was not transitive, so Djoković's criterion fails on some edge of this class.
      for (EdgeId id : theta.edges_of_class[cls])
        if (auto bad = non_convex_side(cls, edges[id])) return *bad;
      throw std::logic_error("inconsistent theta class without a non-convex halfspace");
    }
    if (auto bad = non_convex_side(cls, rep)) return *bad;

    VertexSet side_v = side_u.complement();
    if (side_u.contains(root))
      theta.halfspaces.emplace_back(std::move(side_u), std::move(side_v));
    else
      theta.halfspaces.emplace_back(std::move(side_v), std::move(side_u));
  }

  CubeEmbedding embedding;
  embedding.coords.assign(g.vertex_count(), std::vector<std::uint8_t>(theta.class_count, 0));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    for (std::size_t c = 0; c < theta.class_count; ++c)
      embedding.coords[v][c] = theta.halfspaces[c].first.contains(v) ? 0 : 1;

  return PartialCube{std::move(theta), std::move(embedding)};
}

ThetaPartition require_partial_cube(const Graph& g, Vertex root) {
  auto result = recognize_partial_cube(g, root);
  if (auto* pc = std::get_if<PartialCube>(&result)) return std::move(pc->theta);
  throw std::invalid_argument("graph is not a partial cube");
}

// --- convex cycles -----------------------------------------------------------

ConvexCycle::ConvexCycle(std::vector<Vertex> cyclic_order) : vertices_(std::move(cyclic_order)) {
  if (vertices_.size() < 3) throw std::invalid_argument("cycle needs at least three vertices");
  sorted_ = vertices_;
  std::sort(sorted_.begin(), sorted_.end());
  if (std::adjacent_find(sorted_.begin(), sorted_.end()) != sorted_.end())
    throw std::invalid_argument("cycle repeats a vertex");
}

bool ConvexCycle::contains(Vertex v) const { return std::binary_search(sorted_.begin(), sorted_.end(), v); }

std::size_t ConvexCycle::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) throw std::invalid_argument("vertex not on cycle");
  return static_cast<std::size_t>(it - vertices_.begin());
}

Vertex ConvexCycle::opposite(Vertex v) const {
  return vertices_[(position(v) + vertices_.size() / 2) % vertices_.size()];
}

bool ConvexCycle::has_edge(Vertex a, Vertex b) const {
  if (!contains(a) || !contains(b)) return false;
  const std::size_t n = vertices_.size();
  const std::size_t pa = position(a);
  return vertices_[(pa + 1) % n] == b || vertices_[(pa + n - 1) % n] == b;
}

std::optional<std::vector<Vertex>> induced_cycle_order(const Graph& g, const VertexSet& s) {
  if (s.size() < 3) return std::nullopt;
  auto in_set_neighbors = [&](Vertex v) {
    std::vector<Vertex> out;
    for (Vertex w : g.neighbors(v))
      if (s.contains(w)) out.push_back(w);
    return out;
  };
  const auto members = s.members();
  for (Vertex v : members)
    if (in_set_neighbors(v).size() != 2) return std::nullopt;

  std::vector<Vertex> order{members.front()};
  Vertex prev = members.front();
  Vertex cur = in_set_neighbors(prev).front();
  while (cur != members.front()) {
    order.push_back(cur);
    auto nb = in_set_neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    if (order.size() > members.size()) return std::nullopt;
  }
  if (order.size() != members.size()) return std::nullopt;
  return order;
}

std::vector<ConvexCycle> enumerate_convex_cycles(const Graph& g, const ThetaPartition& theta) {
  if (theta.class_of_edge.size() != g.edge_count())
    throw std::invalid_argument("theta partition does not belong to this graph");
  const std::size_t n = g.vertex_count();
  std::vector<ConvexCycle> cycles;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v + 1; w < n; ++w) {
      const int d = g.distance(v, w);
      if (d < 2) continue;
      std::size_t size = 0;
      bool v_is_min = true;
      for (Vertex x = 0; x < n && v_is_min; ++x) {
        if (between(g, v, x, w)) {
          ++size;
          if (x < v) v_is_min = false;
        }
      }
      if (!v_is_min || size != static_cast<std::size_t>(2 * d)) continue;
      VertexSet iv = interval(g, v, w);
      auto order = induced_cycle_order(g, iv);
      if (!order || !is_convex(g, iv)) continue;
      cycles.emplace_back(std::move(*order));
    }
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace tope
