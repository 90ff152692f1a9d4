#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tope/generators.hpp"
#include "tope/graph.hpp"

using namespace tope;

namespace {

std::vector<bool> mask_of(const VertexSet& s) {
  std::vector<bool> m(s.universe());
  for (Vertex v : s.members()) m[v] = true;
  return m;
}

}  // namespace

TEST(Graph, RejectsSelfLoop) {
  EXPECT_THROW(Graph(2, {{0, 0}, {0, 1}}), GraphError);
}

TEST(Graph, RejectsMultiEdge) {
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), GraphError);
}

TEST(Graph, RejectsDisconnected) {
  EXPECT_THROW(Graph(4, {{0, 1}, {2, 3}}), GraphError);
}

TEST(Graph, RejectsEmptyAndOutOfRange) {
  EXPECT_THROW(Graph(0, std::span<const Edge>{}), GraphError);
  EXPECT_THROW(Graph(2, {{0, 2}}), GraphError);
}

TEST(Graph, SingleVertexIsValid) {
  Graph g(1, std::span<const Edge>{});
  EXPECT_EQ(g.vertex_count(), 1u);
  EXPECT_EQ(g.diameter(), 0);
}

TEST(Graph, EdgesAreCanonical) {
  Graph g(3, {{2, 1}, {1, 0}});
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.edge_id(2, 1), 1u);
  EXPECT_FALSE(g.edge_id(0, 2));
}

TEST(Graph, DistancesMatchFloydWarshall) {
  for (const Graph& g : {hypercube(4), even_cycle(10), grid(3, 4), random_tree(15, 7), cycle(7)}) {
    const auto d = oracle::distances(oracle::plain(g));
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(g.distance(u, v), d[u][v]) << g.name();
  }
}

TEST(Interval, C6OppositeVerticesSpanEverything) {
  const Graph g = even_cycle(6);
  EXPECT_EQ(interval(g, 0, 3).size(), 6u);
  EXPECT_EQ(interval(g, 0, 2).members(), (std::vector<Vertex>{0, 1, 2}));
}

TEST(Convexity, AgreesWithOracleOnRandomSubsets) {
  std::mt19937 rng(11);
  for (const Graph& g : {hypercube(3), even_cycle(8), grid(3, 3), complete_bipartite(2, 3)}) {
    const auto d = oracle::distances(oracle::plain(g));
    for (int trial = 0; trial < 200; ++trial) {
      VertexSet s(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (rng() % 3 == 0) s.insert(v);
      if (s.empty()) s.insert(0);
      const auto w = convexity_violation(g, s);
      ASSERT_EQ(!w, oracle::is_convex(d, mask_of(s)));
      if (w) {
        EXPECT_TRUE(s.contains(w->u) && s.contains(w->v) && !s.contains(w->x));
        EXPECT_TRUE(between(g, w->u, w->x, w->v));
      }
      const VertexSet hull = convex_hull(g, s);
      EXPECT_TRUE(s.is_subset_of(hull));
      EXPECT_TRUE(oracle::is_convex(d, mask_of(hull)));
    }
  }
}

TEST(Convexity, HullIsMinimal) {
  const Graph g = hypercube(3);
  // {000, 011} spans the square with bits 0 and 1
  EXPECT_EQ(convex_hull(g, VertexSet(8, {0, 3})).members(), (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(convex_hull(g, VertexSet(8, {0, 7})).size(), 8u);
}

TEST(Gates, AgreeWithOracleAndImprint) {
  std::mt19937 rng(5);
  for (const Graph& g : {hypercube(3), even_cycle(6), even_cycle(8), grid(3, 3), random_tree(10, 3)}) {
    const auto d = oracle::distances(oracle::plain(g));
    for (int trial = 0; trial < 150; ++trial) {
      VertexSet s(g.vertex_count());
      for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (rng() % 2 == 0) s.insert(v);
      if (s.empty()) s.insert(static_cast<Vertex>(rng() % g.vertex_count()));
      ASSERT_EQ(is_gated(g, s), oracle::is_gated(d, mask_of(s)));
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        const auto fast = find_gate(g, u, s);
        const auto slow = gate(g, u, s);
        ASSERT_EQ(fast.has_value(), std::holds_alternative<Gate>(slow));
        if (fast) {
          EXPECT_EQ(*fast, std::get<Gate>(slow).vertex);
          EXPECT_EQ(imprint(g, u, s).members(), std::vector<Vertex>{*fast});
        } else {
          EXPECT_GT(std::get<NotGatedHere>(slow).imprint.size(), 1u);
        }
      }
    }
  }
}

TEST(Gates, EdgeOfC6IsGatedPathIsNot) {
  const Graph g = even_cycle(6);
  EXPECT_TRUE(is_gated(g, VertexSet(6, {0, 1})));
  // vertex 4 sees both ends of the path at distance 2
  EXPECT_FALSE(is_gated(g, VertexSet(6, {0, 1, 2})));
  EXPECT_EQ(imprint(g, 4, VertexSet(6, {0, 1, 2})).members(), (std::vector<Vertex>{0, 2}));
}

TEST(Gates, EmptySetThrows) {
  const Graph g = even_cycle(4);
  EXPECT_THROW(gatedness_violation(g, VertexSet(4)), std::invalid_argument);
}

TEST(Graph, InducedRenumbers) {
  const Graph g = even_cycle(6);
  const Graph p = g.induced(VertexSet(6, {2, 3, 4}));
  EXPECT_EQ(p.vertex_count(), 3u);
  EXPECT_EQ(p.edge_count(), 2u);
  EXPECT_THROW(g.induced(VertexSet(6, {0, 3})), GraphError);
}
