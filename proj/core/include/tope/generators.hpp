#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tope/graph.hpp"
#include "tope/sign_system.hpp"

namespace tope {

// --- graph families ------------------------------------------------------------

/// Vertices are the integers 0..2^d-1; bit i is coordinate i.
Graph hypercube(int d);
/// Any cycle length >= 3 (odd cycles are useful as negative fixtures).
Graph cycle(int n);
/// Even cycle C_{2m}; rejects odd or < 4 lengths.
Graph even_cycle(int n);
/// Path with n vertices.
Graph path(int n);
/// Vertex (i, j) has index i*b + j.
Graph grid(int a, int b);
/// Vertex (x, y) has index x * |h| + y.
Graph cartesian_product(const Graph& g, const Graph& h);
Graph complete_bipartite(int a, int b);
/// Uniform labelled tree on n vertices from a seeded Prüfer sequence.
Graph random_tree(int n, std::uint64_t seed);

struct HypercubeFamily { int d; };
struct EvenCycleFamily { int length; };
struct GridFamily { int a; int b; };
struct PathFamily { int n; };
struct ProductFamily;
using Family = std::variant<HypercubeFamily, EvenCycleFamily, GridFamily, PathFamily, ProductFamily>;
struct ProductFamily {
  std::vector<Family> factors;
};

Graph generate_family(const Family& family);

// --- Coxeter groups --------------------------------------------------------------

/// Symmetric Coxeter matrix: m(i,i) = 1, m(i,j) >= 2 (2 = commuting).
class CoxeterDiagram {
 public:
  explicit CoxeterDiagram(std::vector<std::vector<int>> order_matrix);

  static CoxeterDiagram type_a(int n);
  static CoxeterDiagram type_b(int n);
  static CoxeterDiagram dihedral(int m);
  /// Block-diagonal union: generators of `a` first, then those of `b`.
  static CoxeterDiagram product(const CoxeterDiagram& a, const CoxeterDiagram& b);
  /// "A3", "B2", "I2(5)", and products joined by 'x', e.g. "A2xA1".
  static CoxeterDiagram parse(std::string_view text);

  std::size_t generator_count() const { return order_.size(); }
  int order(std::size_t i, std::size_t j) const { return order_.at(i).at(j); }
  const std::vector<std::vector<int>>& order_matrix() const { return order_; }

 private:
  std::vector<std::vector<int>> order_;
};

/// Cayley graph w ~ w·s_i from concrete permutation models of each irreducible
/// component (A_n n <= 4, B_n n <= 3, I2(m) m <= 8); products give Cartesian
/// products. Vertices are numbered in breadth-first order from the identity.
Graph coxeter_cayley(const CoxeterDiagram& d, std::string name = {});

// --- central arrangements ------------------------------------------------------

struct ArrangementSpec {
  std::size_t dimension = 0;
  std::vector<std::vector<std::int64_t>> normals;
};

/// Every sign vector realised by some point of R^d, decided exactly by
/// Fourier–Motzkin over all 3^n candidates.
SignSystem central_arrangement_system(const ArrangementSpec& a);

/// Parses "1,0,0;0,1,0;0,0,1" (one normal per ';').
ArrangementSpec parse_arrangement(std::string_view text);

/// Coordinate hyperplanes e1..ed.
ArrangementSpec coordinate_arrangement(std::size_t d);
/// e1, e2, e3, (1,1,1): four generic central planes in R^3.
ArrangementSpec uniform_four_plane_arrangement();

}  // namespace tope
