#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "tope/generators.hpp"
#include "tope/partial_cube.hpp"

using namespace tope;

namespace {

// Random connected graph: a seeded tree plus a few extra edges.
Graph random_connected(int n, int extra, std::uint64_t seed) {
  const Graph t = random_tree(n, seed);
  std::vector<Edge> edges(t.edges().begin(), t.edges().end());
  std::mt19937_64 rng(seed * 31 + 7);
  for (int i = 0; i < extra; ++i) {
    Vertex u = static_cast<Vertex>(rng() % n), v = static_cast<Vertex>(rng() % n);
    if (u == v || t.adjacent(u, v)) continue;
    Edge e{std::min(u, v), std::max(u, v)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Graph(static_cast<std::size_t>(n), edges);
}

std::vector<oracle::VSet> cycle_sets(const std::vector<ConvexCycle>& cycles) {
  std::vector<oracle::VSet> out;
  for (const auto& c : cycles) out.emplace_back(c.members().begin(), c.members().end());
  return out;
}

}  // namespace

TEST(Recognition, C5IsNotBipartite) {
  const Graph g = cycle(5);
  auto r = recognize_partial_cube(g);
  ASSERT_TRUE(std::holds_alternative<NotBipartite>(r));
  const auto& walk = std::get<NotBipartite>(r).odd_walk;
  ASSERT_GE(walk.size(), 2u);
  EXPECT_EQ(walk.front(), walk.back());
  EXPECT_EQ((walk.size() - 1) % 2, 1u);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) EXPECT_TRUE(g.adjacent(walk[i], walk[i + 1]));
}

TEST(Recognition, C6HasThreeOppositePairs) {
  const Graph g = even_cycle(6);
  const ThetaPartition t = require_partial_cube(g);
  ASSERT_EQ(t.class_count, 3u);
  for (const auto& edges : t.edges_of_class) {
    ASSERT_EQ(edges.size(), 2u);
    const Edge a = g.edge(edges[0]), b = g.edge(edges[1]);
    const int near = std::min({g.distance(a.u, b.u), g.distance(a.u, b.v), g.distance(a.v, b.u), g.distance(a.v, b.v)});
    EXPECT_EQ(near, 2);
  }
}

TEST(Recognition, K23IsNotPartialCube) {
  const Graph g = complete_bipartite(2, 3);
  auto r = recognize_partial_cube(g);
  ASSERT_TRUE(std::holds_alternative<NotPartialCube>(r));
  const auto& w = std::get<NotPartialCube>(r);
  // W(a, b) = {x : d(x,a) < d(x,b)}; one of W(a,b), W(b,a) contains u, v but not x.
  auto in_w = [&](Vertex a, Vertex b, Vertex x) { return g.distance(x, a) < g.distance(x, b); };
  const Vertex a = w.edge.u, b = w.edge.v;
  const auto [u, v, x] = w.witness;
  EXPECT_TRUE(between(g, u, x, v));
  const bool side_ab = in_w(a, b, u) && in_w(a, b, v) && !in_w(a, b, x);
  const bool side_ba = in_w(b, a, u) && in_w(b, a, v) && !in_w(b, a, x);
  EXPECT_TRUE(side_ab || side_ba);
  EXPECT_FALSE(oracle::is_partial_cube(oracle::plain(g)));
}

TEST(Recognition, MatchesWinklerOracleOnRandomGraphs) {
  int cubes = 0, others = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 4 + static_cast<int>(seed % 8);
    const Graph g = random_connected(n, static_cast<int>(seed % 4), seed);
    const auto p = oracle::plain(g);
    const bool expected = oracle::is_partial_cube(p);
    auto r = recognize_partial_cube(g);
    ASSERT_EQ(std::holds_alternative<PartialCube>(r), expected) << "seed " << seed;
    if (expected) {
      ++cubes;
      EXPECT_EQ(std::get<PartialCube>(r).theta.class_count, static_cast<std::size_t>(oracle::theta_class_count(p)));
    } else {
      ++others;
    }
  }
  EXPECT_GT(cubes, 20);
  EXPECT_GT(others, 20);
}

TEST(Embedding, IsIsometricAndRooted) {
  for (const Graph& g : {hypercube(4), even_cycle(12), grid(3, 4), random_tree(18, 9),
                         coxeter_cayley(CoxeterDiagram::type_a(3)), coxeter_cayley(CoxeterDiagram::type_b(3))}) {
    for (Vertex root : {Vertex{0}, static_cast<Vertex>(g.vertex_count() - 1)}) {
      auto r = recognize_partial_cube(g, root);
      ASSERT_TRUE(std::holds_alternative<PartialCube>(r));
      const auto& pc = std::get<PartialCube>(r);
      for (auto bit : pc.embedding.coords[root]) EXPECT_EQ(bit, 0);
      for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < g.vertex_count(); ++v) ASSERT_EQ(pc.embedding.hamming(u, v), g.distance(u, v));
    }
  }
}

TEST(Theta, HalfspacesAreComplementaryConvexAndSplitTheirEdges) {
  for (const Graph& g : {hypercube(3), even_cycle(8), grid(2, 3), coxeter_cayley(CoxeterDiagram::type_a(3))}) {
    const ThetaPartition t = require_partial_cube(g);
    const auto d = oracle::distances(oracle::plain(g));
    std::size_t edge_total = 0;
    for (std::size_t c = 0; c < t.class_count; ++c) {
      const auto& [pos, neg] = t.halfspaces[c];
      EXPECT_EQ(pos.complement(), neg);
      EXPECT_TRUE(pos.contains(t.orientation_root));
      std::vector<bool> mp(g.vertex_count()), mn(g.vertex_count());
      for (Vertex v : pos.members()) mp[v] = true;
      for (Vertex v : neg.members()) mn[v] = true;
      EXPECT_TRUE(oracle::is_convex(d, mp));
      EXPECT_TRUE(oracle::is_convex(d, mn));
      for (EdgeId e : t.edges_of_class[c]) {
        EXPECT_NE(pos.contains(g.edge(e).u), pos.contains(g.edge(e).v));
        EXPECT_EQ(t.class_of_edge[e], c);
      }
      edge_total += t.edges_of_class[c].size();
    }
    EXPECT_EQ(edge_total, g.edge_count());
  }
}

TEST(Theta, SeparatingClassesCountEqualsDistance) {
  const Graph g = coxeter_cayley(CoxeterDiagram::dihedral(5));
  const ThetaPartition t = require_partial_cube(g);
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      int separating = 0;
      for (std::size_t c = 0; c < t.class_count; ++c) separating += t.side(c, u) != t.side(c, v);
      EXPECT_EQ(separating, g.distance(u, v));
    }
}

TEST(HalfspaceSide, RootConvention) {
  const Graph q3 = hypercube(3);
  const ThetaPartition t = require_partial_cube(q3);
  const auto cls = t.class_of_edge[*q3.edge_id(0, 1)];
  EXPECT_EQ(halfspace_side(t, cls, 0), +1);
  EXPECT_EQ(halfspace_side(t, cls, 1), -1);
  EXPECT_THROW(halfspace_side(t, 99, 0), std::out_of_range);
  EXPECT_THROW(halfspace_side(t, 0, 99), std::out_of_range);
}

TEST(HalfspaceSide, C6VertexTwoSitsWithVertexOne) {
  const Graph c6 = even_cycle(6);
  const ThetaPartition t = require_partial_cube(c6);
  const auto cls = t.class_of_edge[*c6.edge_id(0, 1)];
  EXPECT_EQ(halfspace_side(t, cls, 2), halfspace_side(t, cls, 1));
  EXPECT_EQ(halfspace_side(t, cls, 2), -1);
}

TEST(ConvexCycles, Q3HasSixSquares) {
  const Graph g = hypercube(3);
  const auto cycles = enumerate_convex_cycles(g, require_partial_cube(g));
  ASSERT_EQ(cycles.size(), 6u);
  for (const auto& c : cycles) EXPECT_EQ(c.length(), 4u);
}

TEST(ConvexCycles, C6IsItsOwnOnlyConvexCycle) {
  const Graph g = even_cycle(6);
  const auto cycles = enumerate_convex_cycles(g, require_partial_cube(g));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0].length(), 6u);
  EXPECT_EQ(cycles[0].opposite(0), 3u);
  EXPECT_TRUE(cycles[0].has_edge(5, 0));
  EXPECT_FALSE(cycles[0].has_edge(0, 2));
}

TEST(ConvexCycles, PermutohedronFacesAreCosets) {
  // The library's A3 graph is compared with an independent S4 model: same
  // face-size profile, and on the model the enumeration equals the coset faces.
  const auto model = oracle::permutohedron4();
  std::vector<Edge> edges;
  for (auto [u, v] : model.edges) edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  const Graph g(24, edges, "S4");
  const auto cycles = enumerate_convex_cycles(g, require_partial_cube(g));
  const auto found = cycle_sets(cycles);
  const auto faces = oracle::permutohedron4_faces();
  EXPECT_EQ(std::set<oracle::VSet>(found.begin(), found.end()), faces);

  const Graph a3 = coxeter_cayley(CoxeterDiagram::type_a(3));
  const auto a3_cycles = enumerate_convex_cycles(a3, require_partial_cube(a3));
  int squares = 0, hexagons = 0;
  for (const auto& c : a3_cycles) (c.length() == 4 ? squares : hexagons) += 1;
  EXPECT_EQ(squares, 6);
  EXPECT_EQ(hexagons, 8);
  EXPECT_EQ(a3_cycles.size(), 14u);
}

TEST(ConvexCycles, MatchPathSearchOracle) {
  for (const Graph& g : {hypercube(3), hypercube(4), even_cycle(10), grid(3, 4), cartesian_product(path(2), even_cycle(6)),
                         coxeter_cayley(CoxeterDiagram::dihedral(7)), coxeter_cayley(CoxeterDiagram::type_b(2)),
                         topes_and_graph(central_arrangement_system(uniform_four_plane_arrangement())).graph}) {
    const auto cycles = enumerate_convex_cycles(g, require_partial_cube(g));
    EXPECT_TRUE(std::is_sorted(cycles.begin(), cycles.end()));
    const auto found = cycle_sets(cycles);
    EXPECT_EQ(std::set<oracle::VSet>(found.begin(), found.end()), oracle::convex_cycles(oracle::plain(g))) << g.name();
    for (const auto& c : cycles) {
      const auto v = c.vertices();
      for (std::size_t i = 0; i < v.size(); ++i) EXPECT_TRUE(g.adjacent(v[i], v[(i + 1) % v.size()]));
      for (Vertex x : v) EXPECT_EQ(g.distance(x, c.opposite(x)), static_cast<int>(c.length() / 2));
    }
  }
}

TEST(ConvexCycles, TreesHaveNone) {
  const Graph g = random_tree(20, 3);
  EXPECT_TRUE(enumerate_convex_cycles(g, require_partial_cube(g)).empty());
}
