#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tope/basepoint_order.hpp"
#include "tope/catalog.hpp"
#include "tope/cell_complex.hpp"
#include "tope/fourier_motzkin.hpp"
#include "tope/generators.hpp"
#include "tope/io.hpp"
#include "tope/mediangle.hpp"

using namespace tope;

namespace {

std::set<std::string> strings(const SignSystem& s) {
  std::set<std::string> out;
  for (const auto& x : s.covectors()) out.insert(x.to_string());
  return out;
}

using R = LinearConstraint::Relation;

}  // namespace

TEST(Families, SizesAndNames) {
  EXPECT_EQ(hypercube(3).vertex_count(), 8u);
  EXPECT_EQ(hypercube(3).edge_count(), 12u);
  EXPECT_EQ(hypercube(3).name(), "Q3");
  EXPECT_EQ(even_cycle(6).edge_count(), 6u);
  EXPECT_EQ(path(6).edge_count(), 5u);
  EXPECT_EQ(grid(3, 4).edge_count(), 17u);
  const Graph prism = cartesian_product(path(2), even_cycle(6));
  EXPECT_EQ(prism.vertex_count(), 12u);
  EXPECT_EQ(prism.edge_count(), 18u);
  EXPECT_EQ(complete_bipartite(2, 3).edge_count(), 6u);
}

TEST(Families, InvalidParameters) {
  EXPECT_THROW(hypercube(-1), std::invalid_argument);
  EXPECT_THROW(even_cycle(5), std::invalid_argument);
  EXPECT_THROW(even_cycle(2), std::invalid_argument);
  EXPECT_THROW(path(0), std::invalid_argument);
  EXPECT_THROW(grid(0, 3), std::invalid_argument);
  EXPECT_THROW(random_tree(0, 1), std::invalid_argument);
}

TEST(Families, GenerateFamilyDispatch) {
  EXPECT_EQ(generate_family(HypercubeFamily{3}).edge_count(), 12u);
  EXPECT_EQ(generate_family(EvenCycleFamily{8}).vertex_count(), 8u);
  EXPECT_EQ(generate_family(GridFamily{2, 3}).vertex_count(), 6u);
  EXPECT_EQ(generate_family(PathFamily{4}).edge_count(), 3u);
  const Graph prism = generate_family(ProductFamily{{PathFamily{2}, EvenCycleFamily{6}}});
  EXPECT_EQ(prism.edge_count(), 18u);
}

TEST(Families, RandomTreesAreSeededTrees) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph t = random_tree(17, seed);
    EXPECT_EQ(t.edge_count(), 16u);
    EXPECT_EQ(serialize_graph(t), serialize_graph(random_tree(17, seed)));
  }
  EXPECT_NE(random_tree(17, 1).edges()[0], random_tree(17, 2).edges()[0]);
}

TEST(Families, ProductsOfPartialCubesArePartialCubes) {
  const Graph g = cartesian_product(even_cycle(6), path(3));
  EXPECT_TRUE(oracle::is_partial_cube(oracle::plain(g)));
  EXPECT_EQ(require_partial_cube(g).class_count, 3u + 2u);
}

TEST(Coxeter, DiagramValidation) {
  EXPECT_THROW(CoxeterDiagram({{1, 3}, {2, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterDiagram({{2, 3}, {3, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterDiagram({{1, 1}, {1, 1}}), std::invalid_argument);
  EXPECT_THROW(CoxeterDiagram::parse("E8"), std::invalid_argument);
  EXPECT_THROW(coxeter_cayley(CoxeterDiagram::parse("A5")), std::invalid_argument);
  EXPECT_THROW(coxeter_cayley(CoxeterDiagram::parse("B4")), std::invalid_argument);
  EXPECT_THROW(coxeter_cayley(CoxeterDiagram::parse("I2(9)")), std::invalid_argument);
  EXPECT_EQ(CoxeterDiagram::parse("A2xA1").generator_count(), 3u);
  EXPECT_EQ(CoxeterDiagram::parse("B3").order(0, 1), 4);
}

TEST(Coxeter, CayleyGraphSizes) {
  const std::vector<std::tuple<std::string, std::size_t, std::size_t, std::size_t>> cases{
      {"I2(3)", 6, 6, 3},  {"I2(8)", 16, 16, 8}, {"A2", 6, 6, 3},      {"A3", 24, 36, 6},
      {"A4", 120, 240, 10}, {"B2", 8, 8, 4},     {"B3", 48, 72, 9},    {"A2xA1", 12, 18, 4}};
  for (const auto& [type, n, m, classes] : cases) {
    const Graph g = coxeter_cayley(CoxeterDiagram::parse(type));
    EXPECT_EQ(g.vertex_count(), n) << type;
    EXPECT_EQ(g.edge_count(), m) << type;
    EXPECT_EQ(require_partial_cube(g).class_count, classes) << type;
  }
}

TEST(Coxeter, SmallTypesMatchCycles) {
  EXPECT_TRUE(oracle::isomorphic(oracle::plain(coxeter_cayley(CoxeterDiagram::parse("I2(3)"))), oracle::plain(even_cycle(6))));
  EXPECT_TRUE(oracle::isomorphic(oracle::plain(coxeter_cayley(CoxeterDiagram::parse("B2"))), oracle::plain(even_cycle(8))));
  EXPECT_TRUE(oracle::isomorphic(oracle::plain(coxeter_cayley(CoxeterDiagram::parse("A3"))), oracle::permutohedron4()));
}

TEST(Coxeter, CayleyGraphsAreMediangleAndAntipodal) {
  for (const char* type : {"I2(3)", "I2(4)", "I2(5)", "I2(6)", "I2(7)", "I2(8)", "A2", "A3", "B2", "B3", "A2xA1", "A1xA1xA1"}) {
    const Graph g = coxeter_cayley(CoxeterDiagram::parse(type));
    EXPECT_TRUE(is_bipartite_mediangle(g).is_mediangle) << type;
    EXPECT_TRUE(is_antipodal_subgraph(g, VertexSet::full(g.vertex_count()))) << type;
    EXPECT_TRUE(is_apiculate(g)) << type;
  }
}

TEST(FourierMotzkin, SmallSystems) {
  // x > 0, -x > 0 is infeasible; x >= 0, -x >= 0 has x = 0.
  EXPECT_FALSE(feasible({{{1}, R::Positive}, {{-1}, R::Positive}}, 1));
  EXPECT_TRUE(feasible({{{1}, R::NonNegative}, {{-1}, R::NonNegative}}, 1));
  // x - y > 0, y - z > 0, z - x > 0 is a strict cycle
  EXPECT_FALSE(feasible({{{1, -1, 0}, R::Positive}, {{0, 1, -1}, R::Positive}, {{-1, 0, 1}, R::Positive}}, 3));
  // x = y, y > 0, x + y > 0
  EXPECT_TRUE(feasible({{{1, -1}, R::Zero}, {{0, 1}, R::Positive}, {{1, 1}, R::Positive}}, 2));
  // x = y, x > 0, y < 0
  EXPECT_FALSE(feasible({{{1, -1}, R::Zero}, {{1, 0}, R::Positive}, {{0, -1}, R::Positive}}, 2));
  // 0 > 0
  EXPECT_FALSE(feasible({{{0, 0}, R::Positive}}, 2));
  EXPECT_TRUE(feasible({}, 3));
}

TEST(FourierMotzkin, OverflowIsReported) {
  const std::int64_t big = std::int64_t{1} << 62;
  std::vector<LinearConstraint> c{{{big, big - 1}, R::Positive}, {{-(big - 1), big}, R::Positive},
                                  {{-big + 3, -big + 5}, R::Positive}};
  EXPECT_THROW(feasible(c, 2), ArithmeticOverflow);
}

TEST(Arrangements, CoordinateCube) {
  const SignSystem s = central_arrangement_system(coordinate_arrangement(3));
  EXPECT_EQ(s.size(), 27u);
  EXPECT_EQ(central_arrangement_system(coordinate_arrangement(1)).size(), 3u);
}

TEST(Arrangements, MatchIntegerGridOracle) {
  const std::vector<std::pair<int, std::string>> specs{
      {3, "1,0,0;0,1,0;0,0,1;1,1,1"}, {2, "1,0;0,1;1,1;1,-1"}, {3, "1,0,0;0,1,0;0,0,1;1,1,1;1,2,3"},
      {4, "1,-1,0,0;1,0,-1,0;1,0,0,-1;0,1,-1,0;0,1,0,-1;0,0,1,-1"}, {2, "2,1;1,3;-1,1"}};
  for (const auto& [dim, text] : specs) {
    const ArrangementSpec a = parse_arrangement(text);
    EXPECT_EQ(a.dimension, static_cast<std::size_t>(dim));
    EXPECT_EQ(strings(central_arrangement_system(a)), oracle::grid_sign_vectors(a.normals, dim, 10)) << text;
  }
}

TEST(Arrangements, UniformFourCounts) {
  const SignSystem s = central_arrangement_system(uniform_four_plane_arrangement());
  EXPECT_TRUE(check_axioms(s).is_om());
  // 14 regions, 24 facets, 12 rays, the origin
  EXPECT_EQ(s.size(), 51u);
  EXPECT_EQ(topes_and_graph(s).topes.size(), 14u);
}

TEST(Arrangements, RejectsDegenerateSpecs) {
  EXPECT_THROW(central_arrangement_system(parse_arrangement("1,0;2,0")), std::invalid_argument);
  EXPECT_THROW(central_arrangement_system(parse_arrangement("1,0;-1,0")), std::invalid_argument);
  EXPECT_THROW(central_arrangement_system(parse_arrangement("0,0;1,0")), std::invalid_argument);
  EXPECT_THROW(central_arrangement_system(parse_arrangement("1;1;1;1;1;1;1")), std::invalid_argument);
  EXPECT_THROW(parse_arrangement("1,0;1"), std::invalid_argument);
  EXPECT_THROW(parse_arrangement("1,x"), std::invalid_argument);
  EXPECT_THROW(central_arrangement_system(parse_arrangement("1,0,0,0,0")), std::invalid_argument);
}

TEST(Arrangements, TopeGraphsArePartialCubes) {
  for (const auto& [name, s] : arrangement_catalog()) {
    EXPECT_TRUE(check_axioms(s).is_om()) << name;
    EXPECT_TRUE(oracle::is_partial_cube(oracle::plain(topes_and_graph(s).graph))) << name;
  }
}

TEST(Arrangements, BraidTopeGraphIsPermutohedron) {
  const SignSystem braid = central_arrangement_system(
      parse_arrangement("1,-1,0,0;1,0,-1,0;1,0,0,-1;0,1,-1,0;0,1,0,-1;0,0,1,-1"));
  EXPECT_TRUE(oracle::isomorphic(oracle::plain(topes_and_graph(braid).graph), oracle::permutohedron4()));
}
