#include "tope/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

namespace tope {

// --- VertexSet -------------------------------------------------------------

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe, std::span<const Vertex>(members.begin(), members.size())) {}

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members) : bits_(universe, 0) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), 1);
  s.count_ = universe;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size()) throw std::out_of_range("vertex out of range");
  if (!bits_[v]) {
    bits_[v] = 1;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v >= bits_.size()) throw std::out_of_range("vertex out of range");
  if (bits_[v]) {
    bits_[v] = 0;
    --count_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

Vertex VertexSet::front() const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) return static_cast<Vertex>(i);
  throw std::logic_error("front() of empty vertex set");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.contains(static_cast<Vertex>(i))) return false;
  return true;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && other.contains(static_cast<Vertex>(i))) out.insert(static_cast<Vertex>(i));
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (!bits_[i]) out.insert(static_cast<Vertex>(i));
  return out;
}

bool operator<(const VertexSet& a, const VertexSet& b) {
  auto ma = a.members();
  auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

// --- Graph -------------------------------------------------------------------

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges, std::string name)
    : adjacency_(vertex_count), incident_(vertex_count), name_(std::move(name)) {
  if (vertex_count == 0) throw GraphError("graph must have at least one vertex");
  if (vertex_count > std::numeric_limits<Vertex>::max() / 2) throw GraphError("graph too large");

  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= vertex_count || e.v >= vertex_count) {
      std::ostringstream msg;
      msg << "edge endpoint out of range: (" << e.u << "," << e.v << ")";
      throw GraphError(msg.str());
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    edges_.push_back(Edge{std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    std::ostringstream msg;
    msg << "multi-edge between " << dup->u << " and " << dup->v;
    throw GraphError(msg.str());
  }
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    adjacency_[edges_[id].u].push_back(edges_[id].v);
    adjacency_[edges_[id].v].push_back(edges_[id].u);
  }
  for (Vertex v = 0; v < vertex_count; ++v) {
    auto& adj = adjacency_[v];
    std::sort(adj.begin(), adj.end());
    incident_[v].reserve(adj.size());
    for (Vertex w : adj) incident_[v].push_back(*edge_id(v, w));
  }

  const std::size_t n = vertex_count;
  dist_.assign(n * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex s = 0; s < n; ++s) {
    int* row = dist_.data() + static_cast<std::size_t>(s) * n;
    std::size_t head = 0, tail = 0;
    row[s] = 0;
    queue[tail++] = s;
    while (head < tail) {
      Vertex x = queue[head++];
      for (Vertex y : adjacency_[x]) {
        if (row[y] < 0) {
          row[y] = row[x] + 1;
          queue[tail++] = y;
        }
      }
    }
    if (tail != n) throw GraphError("graph is disconnected");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  require_vertex(u);
  require_vertex(v);
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  if (!valid(u) || !valid(v) || u == v) return std::nullopt;
  Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

int Graph::diameter() const { return *std::max_element(dist_.begin(), dist_.end()); }

void Graph::require_vertex(Vertex v) const {
  if (!valid(v)) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

Graph Graph::induced(const VertexSet& s) const {
  std::vector<Vertex> index(vertex_count(), std::numeric_limits<Vertex>::max());
  Vertex next = 0;
  for (Vertex v : s.members()) index[v] = next++;
  std::vector<Edge> sub;
  for (const Edge& e : edges_)
    if (s.contains(e.u) && s.contains(e.v)) sub.push_back(Edge{index[e.u], index[e.v]});
  return Graph(s.size(), sub, name_.empty() ? std::string{} : name_ + "[induced]");
}

// --- metric primitives -----------------------------------------------------

namespace {

void require_nonempty(const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("vertex set must be non-empty");
}

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.vertex_count())
    throw std::invalid_argument("vertex set universe does not match graph");
}

}  // namespace

VertexSet interval(const Graph& g, Vertex u, Vertex v) {
  g.require_vertex(u);
  g.require_vertex(v);
  VertexSet out(g.vertex_count());
  for (Vertex x = 0; x < g.vertex_count(); ++x)
    if (between(g, u, x, v)) out.insert(x);
  return out;
}

VertexSet convex_hull(const Graph& g, const VertexSet& s) {
  require_nonempty(s);
  require_universe(g, s);
  VertexSet hull = s;
  bool grew = true;
  while (grew) {
    grew = false;
    const auto current = hull.members();
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
          if (!hull.contains(x) && between(g, current[i], x, current[j])) {
            hull.insert(x);
            grew = true;
          }
        }
      }
    }
  }
  return hull;
}

std::optional<ConvexityWitness> convexity_violation(const Graph& g, const VertexSet& s) {
  require_nonempty(s);
  require_universe(g, s);
  const auto inside = s.members();
  const auto outside = s.complement().members();
  for (std::size_t i = 0; i < inside.size(); ++i)
    for (std::size_t j = i + 1; j < inside.size(); ++j)
      for (Vertex x : outside)
        if (between(g, inside[i], x, inside[j])) return ConvexityWitness{inside[i], inside[j], x};
  return std::nullopt;
}

VertexSet imprint(const Graph& g, Vertex u, const VertexSet& s) {
  require_nonempty(s);
  require_universe(g, s);
  g.require_vertex(u);
  VertexSet out(g.vertex_count());
  const auto members = s.members();
  for (Vertex x : members) {
    bool alone = true;
    for (Vertex y : members) {
      if (y != x && between(g, u, y, x)) {
        alone = false;
        break;
      }
    }
    if (alone) out.insert(x);
  }
  return out;
}

GateResult gate(const Graph& g, Vertex u, const VertexSet& s) {
  VertexSet imp = imprint(g, u, s);
  if (imp.size() == 1) {
    const Vertex x = imp.front();
    bool on_all = true;
    for (Vertex v : s.members()) {
      if (!between(g, u, x, v)) {
        on_all = false;
        break;
      }
    }
    if (on_all) return Gate{x};
  }
  return NotGatedHere{std::move(imp)};
}

std::optional<Vertex> find_gate(const Graph& g, Vertex u, const VertexSet& s) {
  std::optional<Vertex> nearest;
  const std::size_t n = g.vertex_count();
  for (Vertex x = 0; x < n; ++x)
    if (s.contains(x) && (!nearest || g.distance(u, x) < g.distance(u, *nearest))) nearest = x;
  if (!nearest) return std::nullopt;
  for (Vertex v = 0; v < n; ++v)
    if (s.contains(v) && !between(g, u, *nearest, v)) return std::nullopt;
  return nearest;
}

std::optional<Vertex> gatedness_violation(const Graph& g, const VertexSet& s) {
  require_nonempty(s);
  require_universe(g, s);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (!s.contains(u) && !find_gate(g, u, s)) return u;
  return std::nullopt;
}

}  // namespace tope
