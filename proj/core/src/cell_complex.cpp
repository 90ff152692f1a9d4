#include "tope/cell_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace tope {

Vertex Cell::antipode(Vertex v) const {
  auto it = std::lower_bound(members.begin(), members.end(), v);
  if (it == members.end() || *it != v) throw std::invalid_argument("vertex not in cell");
  return antipodes[static_cast<std::size_t>(it - members.begin())];
}

std::optional<Vertex> antipode_in(const Graph& g, const VertexSet& s, Vertex v) {
  g.require_vertex(v);
  if (!s.contains(v)) throw std::invalid_argument("vertex not in set");
  // Inside [v, w] every member other than w is strictly closer to v.
  std::optional<Vertex> far;
  for (Vertex x : s.members())
    if (!far || g.distance(v, x) > g.distance(v, *far)) far = x;
  if (interval(g, v, *far) == s) return far;
  return std::nullopt;
}

bool is_antipodal_subgraph(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw std::invalid_argument("vertex set must be non-empty");
  for (Vertex v : s.members())
    if (!antipode_in(g, s, v)) return false;
  return true;
}

namespace {

bool cell_order(const VertexSet& a, int da, const VertexSet& b, int db) {
  if (da != db) return da < db;
  return a < b;
}

}  // namespace

std::vector<AntipodalInterval> enumerate_antipodal_intervals(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<AntipodalInterval> out;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w = v; w < n; ++w) {
      bool v_is_min = true;
      for (Vertex x = 0; x < v && v_is_min; ++x)
        if (between(g, v, x, w)) v_is_min = false;
      if (!v_is_min) continue;
      VertexSet iv = interval(g, v, w);
      if (!is_antipodal_subgraph(g, iv)) continue;
      const bool gated = is_gated(g, iv);
      out.push_back(AntipodalInterval{std::move(iv), v, w, gated});
    }
  }
  std::sort(out.begin(), out.end(), [&](const AntipodalInterval& a, const AntipodalInterval& b) {
    return cell_order(a.vertices, g.distance(a.low, a.high), b.vertices, g.distance(b.low, b.high));
  });
  return out;
}

SignVector tope_of(const ThetaPartition& theta, Vertex v) {
  SignVector t(theta.class_count);
  for (std::size_t c = 0; c < theta.class_count; ++c) t.set(c, theta.side(c, v));
  return t;
}

namespace {

SignVector covector_unchecked(const ThetaPartition& theta, const VertexSet& s) {
  SignVector x(theta.class_count);
  const auto members = s.members();
  for (std::size_t c = 0; c < theta.class_count; ++c) {
    const auto& pos = theta.halfspaces[c].first;
    bool any_pos = false, any_neg = false;
    for (Vertex v : members) (pos.contains(v) ? any_pos : any_neg) = true;
    x.set(c, any_pos && any_neg ? 0 : (any_pos ? 1 : -1));
  }
  return x;
}

Cell make_cell(const Graph& g, const ThetaPartition& theta, VertexSet s, Vertex low, Vertex high) {
  Cell cell;
  cell.members = s.members();
  cell.antipodes.reserve(cell.members.size());
  for (Vertex v : cell.members) cell.antipodes.push_back(*antipode_in(g, s, v));
  cell.covector = covector_unchecked(theta, s);
  cell.diameter = g.distance(low, high);
  cell.vertices = std::move(s);
  return cell;
}

}  // namespace

std::vector<Cell> enumerate_cells(const Graph& g, const ThetaPartition& theta) {
  if (theta.class_of_edge.size() != g.edge_count())
    throw std::invalid_argument("theta partition does not belong to this graph");
  std::vector<Cell> cells;
  for (auto& candidate : enumerate_antipodal_intervals(g))
    if (candidate.gated)
      cells.push_back(make_cell(g, theta, std::move(candidate.vertices), candidate.low, candidate.high));
  return cells;
}

SignVector covector_of_cell(const Graph& g, const ThetaPartition& theta, const VertexSet& s) {
  if (s.empty() || !is_antipodal_subgraph(g, s) || !is_gated(g, s))
    throw std::invalid_argument("vertex set is not a cell");
  return covector_unchecked(theta, s);
}

SignSystem reconstruct_system(const Graph& g, const ThetaPartition& theta) {
  std::vector<SignVector> covectors;
  for (const auto& cell : enumerate_cells(g, theta)) covectors.push_back(cell.covector);
  return SignSystem(theta.class_count, std::move(covectors));
}

long euler_characteristic(std::span<const Cell> cells, std::span<const int> lattice_ranks) {
  if (cells.size() != lattice_ranks.size()) throw std::invalid_argument("cell and rank counts differ");
  long chi = 0;
  for (int r : lattice_ranks) chi += (r % 2 == 0) ? 1 : -1;
  return chi;
}

std::vector<int> cell_ranks(std::span<const Cell> cells, const SignSystem& system, const FaceLattice& lattice) {
  std::vector<int> ranks;
  ranks.reserve(cells.size());
  for (const auto& cell : cells) {
    auto idx = system.index_of(cell.covector);
    if (!idx) throw std::invalid_argument("cell covector missing from system");
    ranks.push_back(lattice.face_rank.at(*idx));
  }
  return ranks;
}

}  // namespace tope
