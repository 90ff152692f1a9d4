#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tope/graph.hpp"
#include "tope/partial_cube.hpp"
#include "tope/sign_system.hpp"

namespace tope {

/// A gated antipodal subgraph with its antipode involution and covector.
struct Cell {
  VertexSet vertices;
  /// antipodes[i] is the antipode of members[i].
  std::vector<Vertex> members;
  std::vector<Vertex> antipodes;
  SignVector covector;
  int diameter = 0;

  Vertex antipode(Vertex v) const;
};

/// The unique w in s with s = interval(v, w), if any. v must be in s.
std::optional<Vertex> antipode_in(const Graph& g, const VertexSet& s, Vertex v);

bool is_antipodal_subgraph(const Graph& g, const VertexSet& s);

/// An antipodal interval together with whether it is gated.
struct AntipodalInterval {
  VertexSet vertices;
  Vertex low;
  Vertex high;
  bool gated;
};

/// Every antipodal subgraph of g exactly once (each equals interval(v, v̄) for
/// its least vertex v), with its gatedness. Sorted by (diameter, members).
std::vector<AntipodalInterval> enumerate_antipodal_intervals(const Graph& g);

/// Cells (gated antipodal subgraphs) of a partial cube, sorted by (diameter, members).
std::vector<Cell> enumerate_cells(const Graph& g, const ThetaPartition& theta);

/// 0 on classes separating two members of s, otherwise the common side.
/// Throws std::invalid_argument when s is not a cell.
SignVector covector_of_cell(const Graph& g, const ThetaPartition& theta, const VertexSet& s);

/// The tope labelling of a single vertex.
SignVector tope_of(const ThetaPartition& theta, Vertex v);

/// All cell covectors; vertex v corresponds to tope_of(theta, v).
SignSystem reconstruct_system(const Graph& g, const ThetaPartition& theta);

/// Σ (-1)^rank over cells. Lengths must match.
long euler_characteristic(std::span<const Cell> cells, std::span<const int> lattice_ranks);

/// Rank of Face(X) for each cell's covector X, read from the face lattice of `system`.
std::vector<int> cell_ranks(std::span<const Cell> cells, const SignSystem& system, const FaceLattice& lattice);

}  // namespace tope
