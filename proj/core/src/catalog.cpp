#include "tope/catalog.hpp"

namespace tope {

namespace {

CatalogEntry entry(Graph g) {
  std::string name = g.name();
  return CatalogEntry{std::move(name), std::move(g)};
}

}  // namespace

std::vector<CatalogEntry> antipodal_catalog() {
  std::vector<CatalogEntry> out;
  for (int len : {4, 6, 8, 10, 12}) out.push_back(entry(even_cycle(len)));
  for (int d = 1; d <= 4; ++d) out.push_back(entry(hypercube(d)));
  for (int m = 3; m <= 7; ++m) out.push_back(entry(coxeter_cayley(CoxeterDiagram::dihedral(m), "Cayley I2(" + std::to_string(m) + ")")));
  out.push_back(entry(coxeter_cayley(CoxeterDiagram::type_a(2), "Cayley A2")));
  out.push_back(entry(coxeter_cayley(CoxeterDiagram::type_a(3), "Cayley A3")));
  out.push_back(entry(coxeter_cayley(CoxeterDiagram::type_b(2), "Cayley B2")));
  out.push_back(entry(coxeter_cayley(CoxeterDiagram::type_b(3), "Cayley B3")));
  Graph prism = cartesian_product(path(2), even_cycle(6));
  prism.set_name("K2xC6");
  out.push_back(entry(std::move(prism)));
  return out;
}

Graph uniform_four_tope_graph() {
  Graph g = topes_and_graph(central_arrangement_system(uniform_four_plane_arrangement())).graph;
  g.set_name("uniform4-topes");
  return g;
}

std::vector<CatalogEntry> mediangle_catalog(std::uint64_t seed) {
  std::vector<CatalogEntry> out = antipodal_catalog();
  out.push_back(entry(grid(3, 3)));
  out.push_back(entry(path(6)));
  for (int n : {1, 2, 5, 8, 12, 16, 20}) out.push_back(entry(random_tree(n, seed + static_cast<std::uint64_t>(n))));
  return out;
}

std::vector<SystemEntry> arrangement_catalog() {
  std::vector<SystemEntry> out;
  for (std::size_t d = 1; d <= 4; ++d)
    out.push_back({"coordinate R^" + std::to_string(d), central_arrangement_system(coordinate_arrangement(d))});
  out.push_back({"uniform four planes", central_arrangement_system(uniform_four_plane_arrangement())});
  out.push_back({"B2 lines", central_arrangement_system(parse_arrangement("1,0;0,1;1,1;1,-1"))});
  out.push_back({"braid A3", central_arrangement_system(
                                 parse_arrangement("1,-1,0,0;1,0,-1,0;1,0,0,-1;0,1,-1,0;0,1,0,-1;0,0,1,-1"))});
  out.push_back({"generic five planes", central_arrangement_system(parse_arrangement("1,0,0;0,1,0;0,0,1;1,1,1;1,2,3"))});
  return out;
}

}  // namespace tope
