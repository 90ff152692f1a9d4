#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tope/catalog.hpp"
#include "tope/cell_complex.hpp"
#include "tope/generators.hpp"
#include "tope/mediangle.hpp"
#include "tope/zone.hpp"

using namespace tope;

namespace {

struct Fixture {
  Graph g;
  ThetaPartition theta;
  std::vector<ConvexCycle> cycles;
  SignSystem system;
};

Fixture setup(Graph g) {
  ThetaPartition t = require_partial_cube(g);
  auto cycles = enumerate_convex_cycles(g, t);
  SignSystem s = reconstruct_system(g, t);
  return Fixture{std::move(g), std::move(t), std::move(cycles), std::move(s)};
}

std::pair<std::size_t, std::size_t> degree_range(const Graph& g) {
  std::size_t lo = g.vertex_count(), hi = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    lo = std::min(lo, g.degree(v));
    hi = std::max(hi, g.degree(v));
  }
  return {lo, hi};
}

}  // namespace

TEST(Zone, Q3ZonesAreSquares) {
  const Fixture s = setup(hypercube(3));
  for (std::size_t c = 0; c < s.theta.class_count; ++c) {
    const Graph z = zone_graph(s.g, s.theta, s.cycles, c);
    EXPECT_TRUE(oracle::isomorphic(oracle::plain(z), oracle::plain(even_cycle(4))));
    EXPECT_TRUE(is_bipartite_mediangle(z).is_mediangle);
  }
}

TEST(Zone, C6ZonesAreEdges) {
  const Fixture s = setup(even_cycle(6));
  for (std::size_t c = 0; c < 3; ++c) {
    const Graph z = zone_graph(s.g, s.theta, s.cycles, c);
    EXPECT_EQ(z.vertex_count(), 2u);
    EXPECT_EQ(z.edge_count(), 1u);
  }
  EXPECT_THROW(zone_graph(s.g, s.theta, s.cycles, 3), std::out_of_range);
}

TEST(Zone, MatchesContractionTopeGraph) {
  for (const auto& [name, g] : antipodal_catalog()) {
    if (g.vertex_count() > 24 || g.vertex_count() < 4) continue;
    const Fixture s = setup(g);
    for (std::size_t c = 0; c < s.theta.class_count; ++c) {
      const Graph z = zone_graph(s.g, s.theta, s.cycles, c);
      const Graph expected = topes_and_graph(simplify(contract_elements(s.system, {c})).system).graph;
      EXPECT_TRUE(oracle::isomorphic(oracle::plain(z), oracle::plain(expected))) << name << " class " << c;
    }
  }
}

TEST(Zone, DeletionTopeGraphIsClassContraction) {
  for (const auto& [name, g] : antipodal_catalog()) {
    if (g.vertex_count() > 24 || g.vertex_count() < 4) continue;
    const Fixture s = setup(g);
    for (std::size_t c = 0; c < s.theta.class_count; ++c) {
      const auto [contracted, map] = contract_theta_class(s.g, s.theta, c);
      EXPECT_EQ(map.size(), s.g.vertex_count());
      const Graph expected = topes_and_graph(delete_elements(s.system, {c})).graph;
      EXPECT_TRUE(oracle::isomorphic(oracle::plain(contracted), oracle::plain(expected))) << name << " class " << c;
    }
  }
}

TEST(Zone, PermutohedronZonesAreHexagonsAndDeletionsHaveDegreesThreeAndFour) {
  const Fixture s = setup(coxeter_cayley(CoxeterDiagram::type_a(3)));
  ASSERT_EQ(s.theta.class_count, 6u);
  for (std::size_t c = 0; c < 6; ++c) {
    const Graph z = zone_graph(s.g, s.theta, s.cycles, c);
    EXPECT_TRUE(oracle::isomorphic(oracle::plain(z), oracle::plain(even_cycle(6))));
    const SignSystem del = delete_elements(s.system, {c});
    EXPECT_EQ(degree_range(topes_and_graph(del).graph), (std::pair<std::size_t, std::size_t>{3, 4}));
    EXPECT_FALSE(is_simplicial_om(del).simplicial);
  }
}
