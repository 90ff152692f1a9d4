#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tope/generators.hpp"
#include "tope/graph.hpp"
#include "tope/sign_system.hpp"

namespace tope {

struct CatalogEntry {
  std::string name;
  Graph graph;
};

/// C4..C12, Q1..Q4, I2(3..7), A2, A3, B2, B3 Cayley graphs, K2 x C6.
std::vector<CatalogEntry> antipodal_catalog();

/// Tope graph of four generic central planes in R^3 (14 vertices).
Graph uniform_four_tope_graph();

/// The antipodal catalog plus grid(3,3), path(6) and seeded random trees.
std::vector<CatalogEntry> mediangle_catalog(std::uint64_t seed = 2024);

struct SystemEntry {
  std::string name;
  SignSystem system;
};

/// Covector systems of realisable central arrangements: coordinate
/// arrangements in R^1..R^4, the uniform four-plane arrangement, the B2 and
/// braid (A3) arrangements, and a generic five-plane arrangement.
std::vector<SystemEntry> arrangement_catalog();

}  // namespace tope
