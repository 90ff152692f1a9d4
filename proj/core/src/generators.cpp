#include "tope/generators.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "tope/fourier_motzkin.hpp"

namespace tope {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

// --- graph families ------------------------------------------------------------

Graph hypercube(int d) {
  require(d >= 0 && d <= 16, "hypercube dimension must be in [0, 16]");
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int i = 0; i < d; ++i)
      if (!(v & (Vertex{1} << i))) edges.push_back(Edge{v, v | (Vertex{1} << i)});
  return Graph(n, edges, "Q" + std::to_string(d));
}

Graph cycle(int n) {
  require(n >= 3, "cycle length must be at least 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
  return Graph(n, edges, "C" + std::to_string(n));
}

Graph even_cycle(int n) {
  require(n >= 4 && n % 2 == 0, "even cycle length must be even and at least 4");
  return cycle(n);
}

Graph path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return Graph(n, edges, "P" + std::to_string(n));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count();
  std::vector<Edge> edges;
  for (Vertex x = 0; x < ng; ++x)
    for (const Edge& e : h.edges()) edges.push_back(Edge{static_cast<Vertex>(x * nh + e.u), static_cast<Vertex>(x * nh + e.v)});
  for (const Edge& e : g.edges())
    for (Vertex y = 0; y < nh; ++y) edges.push_back(Edge{static_cast<Vertex>(e.u * nh + y), static_cast<Vertex>(e.v * nh + y)});
  return Graph(ng * nh, edges, g.name() + "x" + h.name());
}

Graph grid(int a, int b) {
  require(a >= 1 && b >= 1, "grid sides must be positive");
  Graph g = cartesian_product(path(a), path(b));
  g.set_name("grid(" + std::to_string(a) + "," + std::to_string(b) + ")");
  return g;
}

Graph complete_bipartite(int a, int b) {
  require(a >= 1 && b >= 1, "complete bipartite sides must be positive");
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back(Edge{static_cast<Vertex>(i), static_cast<Vertex>(a + j)});
  return Graph(a + b, edges, "K(" + std::to_string(a) + "," + std::to_string(b) + ")");
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "tree needs at least one vertex");
  std::string name = "tree(" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")";
  if (n <= 2) return n == 1 ? Graph(1, {}, name) : Graph(2, {Edge{0, 1}}, name);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> prufer(n - 2);
  for (auto& p : prufer) p = pick(rng);

  std::vector<int> degree(n, 1);
  for (int p : prufer) ++degree[p];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.insert(v);
  std::vector<Edge> edges;
  for (int p : prufer) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back(Edge{static_cast<Vertex>(leaf), static_cast<Vertex>(p)});
    if (--degree[p] == 1) leaves.insert(p);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
  return Graph(n, edges, name);
}

Graph generate_family(const Family& family) {
  return std::visit(
      [](const auto& f) -> Graph {
        using T = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<T, HypercubeFamily>) {
          require(f.d >= 1, "hypercube dimension must be positive");
          return hypercube(f.d);
        } else if constexpr (std::is_same_v<T, EvenCycleFamily>) {
          return even_cycle(f.length);
        } else if constexpr (std::is_same_v<T, GridFamily>) {
          return grid(f.a, f.b);
        } else if constexpr (std::is_same_v<T, PathFamily>) {
          return path(f.n);
        } else {
          require(!f.factors.empty(), "product needs at least one factor");
          Graph g = generate_family(f.factors.front());
          for (std::size_t i = 1; i < f.factors.size(); ++i) g = cartesian_product(g, generate_family(f.factors[i]));
          return g;
        }
      },
      family);
}

// --- Coxeter diagrams ----------------------------------------------------------

CoxeterDiagram::CoxeterDiagram(std::vector<std::vector<int>> order_matrix) : order_(std::move(order_matrix)) {
  const std::size_t n = order_.size();
  require(n >= 1, "Coxeter diagram needs at least one generator");
  for (std::size_t i = 0; i < n; ++i) {
    require(order_[i].size() == n, "Coxeter matrix must be square");
    require(order_[i][i] == 1, "Coxeter matrix diagonal must be 1");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      require(order_[i][j] >= 2, "off-diagonal Coxeter entries must be >= 2");
      require(order_[i][j] == order_[j][i], "Coxeter matrix must be symmetric");
    }
  }
}

namespace {

std::vector<std::vector<int>> path_matrix(int n, int first_label) {
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = (i == 0 ? first_label : 3);
  return m;
}

}  // namespace

CoxeterDiagram CoxeterDiagram::type_a(int n) {
  require(n >= 1, "type A rank must be positive");
  return CoxeterDiagram(path_matrix(n, 3));
}

CoxeterDiagram CoxeterDiagram::type_b(int n) {
  require(n >= 2, "type B rank must be at least 2");
  return CoxeterDiagram(path_matrix(n, 4));
}

CoxeterDiagram CoxeterDiagram::dihedral(int m) {
  require(m >= 2, "dihedral order must be at least 2");
  return CoxeterDiagram({{1, m}, {m, 1}});
}

CoxeterDiagram CoxeterDiagram::product(const CoxeterDiagram& a, const CoxeterDiagram& b) {
  const std::size_t na = a.generator_count(), n = na + b.generator_count();
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) m[i][j] = a.order(i, j);
  for (std::size_t i = 0; i < b.generator_count(); ++i)
    for (std::size_t j = 0; j < b.generator_count(); ++j) m[na + i][na + j] = b.order(i, j);
  return CoxeterDiagram(std::move(m));
}

CoxeterDiagram CoxeterDiagram::parse(std::string_view text) {
  std::optional<CoxeterDiagram> result;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('x', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    require(!part.empty(), "empty Coxeter factor in '" + std::string(text) + "'");

    auto parse_int = [&](std::string_view digits) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
      require(ec == std::errc{} && ptr == digits.data() + digits.size(), "bad Coxeter type '" + std::string(part) + "'");
      return value;
    };
    std::optional<CoxeterDiagram> factor;
    if (part.starts_with("I2(") && part.ends_with(")"))
      factor = dihedral(parse_int(part.substr(3, part.size() - 4)));
    else if (part.starts_with("A"))
      factor = type_a(parse_int(part.substr(1)));
    else if (part.starts_with("B"))
      factor = type_b(parse_int(part.substr(1)));
    else
      throw std::invalid_argument("unsupported Coxeter type '" + std::string(part) + "'");
    result = result ? product(*result, *factor) : *factor;
    start = end + 1;
  }
  return *result;
}

// --- Cayley graphs -------------------------------------------------------------

namespace {

using State = std::vector<int>;
// Right multiplication by a generator, acting on a component's slice of the state.
using Move = std::function<void(State&)>;

struct ComponentModel {
  State identity;
  std::vector<Move> moves;
  std::string name;
};

ComponentModel type_a_model(int rank, std::size_t offset) {
  ComponentModel m;
  for (int i = 0; i <= rank; ++i) m.identity.push_back(i);
  for (int i = 0; i < rank; ++i)
    m.moves.push_back([=](State& s) { std::swap(s[offset + i], s[offset + i + 1]); });
  m.name = "A" + std::to_string(rank);
  return m;
}

// Signed permutations of {1..rank}; generator 0 flips the first sign.
ComponentModel type_b_model(int rank, std::size_t offset) {
  ComponentModel m;
  for (int i = 1; i <= rank; ++i) m.identity.push_back(i);
  m.moves.push_back([=](State& s) { s[offset] = -s[offset]; });
  for (int i = 0; i + 1 < rank; ++i)
    m.moves.push_back([=](State& s) { std::swap(s[offset + i], s[offset + i + 1]); });
  m.name = "B" + std::to_string(rank);
  return m;
}

// Dihedral group acting on the m vertices of a polygon; w·s = w ∘ s.
ComponentModel dihedral_model(int order, std::size_t offset) {
  ComponentModel m;
  for (int i = 0; i < order; ++i) m.identity.push_back(i);
  auto reflect = [=](int shift) {
    return [=](State& s) {
      State copy(s.begin() + offset, s.begin() + offset + order);
      for (int k = 0; k < order; ++k) s[offset + k] = copy[((shift - k) % order + order) % order];
    };
  };
  m.moves.push_back(reflect(0));
  m.moves.push_back(reflect(1));
  m.name = "I2(" + std::to_string(order) + ")";
  return m;
}

// Orders the generators of an irreducible component along its diagram path and
// returns its model; generators are given in global index order.
ComponentModel classify(const CoxeterDiagram& d, const std::vector<std::size_t>& gens, std::size_t offset,
                        std::vector<std::size_t>& move_order) {
  const std::size_t k = gens.size();
  if (k == 1) {
    move_order = gens;
    ComponentModel m = type_a_model(1, offset);
    return m;
  }
  if (k == 2) {
    const int label = d.order(gens[0], gens[1]);
    require(label <= 8, "dihedral components support m <= 8");
    move_order = gens;
    return label == 3 ? type_a_model(2, offset) : dihedral_model(label, offset);
  }
  // k >= 3: must be a path with labels 3 except possibly a 4 at one end.
  std::map<std::size_t, std::vector<std::size_t>> nbrs;
  std::size_t edge_count = 0;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b)
      if (d.order(gens[a], gens[b]) >= 3) {
        nbrs[gens[a]].push_back(gens[b]);
        nbrs[gens[b]].push_back(gens[a]);
        ++edge_count;
      }
  require(edge_count == k - 1, "unsupported Coxeter component (not a path)");
  std::vector<std::size_t> ends;
  for (auto g : gens) {
    require(nbrs[g].size() <= 2, "unsupported Coxeter component (branching)");
    if (nbrs[g].size() == 1) ends.push_back(g);
  }
  require(ends.size() == 2, "unsupported Coxeter component");
  auto walk = [&](std::size_t from) {
    std::vector<std::size_t> order{from};
    std::size_t prev = from, cur = nbrs[from][0];
    order.push_back(cur);
    while (nbrs[cur].size() == 2) {
      std::size_t next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
      prev = cur;
      cur = next;
      order.push_back(cur);
    }
    return order;
  };
  std::vector<std::size_t> order = walk(ends[0]);
  std::vector<int> labels;
  for (std::size_t i = 0; i + 1 < k; ++i) labels.push_back(d.order(order[i], order[i + 1]));
  if (std::all_of(labels.begin(), labels.end(), [](int l) { return l == 3; })) {
    require(k <= 4, "type A supported up to rank 4");
    move_order = order;
    return type_a_model(static_cast<int>(k), offset);
  }
  if (labels.back() == 4) {
    std::reverse(order.begin(), order.end());
    std::reverse(labels.begin(), labels.end());
  }
  bool is_b = labels.front() == 4 && std::all_of(labels.begin() + 1, labels.end(), [](int l) { return l == 3; });
  require(is_b, "unsupported Coxeter component");
  require(k <= 3, "type B supported up to rank 3");
  move_order = order;
  return type_b_model(static_cast<int>(k), offset);
}

}  // namespace

Graph coxeter_cayley(const CoxeterDiagram& d, std::string name) {
  const std::size_t n = d.generator_count();
  std::vector<int> component(n, -1);
  std::vector<std::vector<std::size_t>> components;
  for (std::size_t s = 0; s < n; ++s) {
    if (component[s] >= 0) continue;
    components.emplace_back();
    std::vector<std::size_t> stack{s};
    component[s] = static_cast<int>(components.size() - 1);
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      components.back().push_back(a);
      for (std::size_t b = 0; b < n; ++b)
        if (b != a && d.order(a, b) >= 3 && component[b] < 0) {
          component[b] = component[s];
          stack.push_back(b);
        }
    }
    std::sort(components.back().begin(), components.back().end());
  }

  State identity;
  std::vector<Move> moves(n);
  std::string derived_name;
  for (const auto& gens : components) {
    std::vector<std::size_t> order;
    ComponentModel model = classify(d, gens, identity.size(), order);
    identity.insert(identity.end(), model.identity.begin(), model.identity.end());
    for (std::size_t i = 0; i < order.size(); ++i) moves[order[i]] = model.moves[i];
    derived_name += (derived_name.empty() ? "" : "x") + model.name;
  }

  std::map<State, Vertex> index{{identity, 0}};
  std::vector<State> elements{identity};
  std::vector<Edge> edges;
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& move : moves) {
      State next = elements[head];
      move(next);
      auto [it, fresh] = index.try_emplace(next, static_cast<Vertex>(elements.size()));
      if (fresh) elements.push_back(std::move(next));
      if (static_cast<Vertex>(head) < it->second) edges.push_back(Edge{static_cast<Vertex>(head), it->second});
    }
  }
  return Graph(elements.size(), edges, name.empty() ? derived_name : std::move(name));
}

// --- arrangements ----------------------------------------------------------------

ArrangementSpec coordinate_arrangement(std::size_t d) {
  ArrangementSpec a{d, {}};
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<std::int64_t> n(d, 0);
    n[i] = 1;
    a.normals.push_back(std::move(n));
  }
  return a;
}

ArrangementSpec uniform_four_plane_arrangement() {
  ArrangementSpec a = coordinate_arrangement(3);
  a.normals.push_back({1, 1, 1});
  return a;
}

ArrangementSpec parse_arrangement(std::string_view text) {
  ArrangementSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view row = text.substr(start, end - start);
    std::vector<std::int64_t> normal;
    std::size_t p = 0;
    while (p <= row.size()) {
      std::size_t q = row.find(',', p);
      if (q == std::string_view::npos) q = row.size();
      std::string_view tok = row.substr(p, q - p);
      std::int64_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      require(!tok.empty() && ec == std::errc{} && ptr == tok.data() + tok.size(),
              "bad arrangement coefficient '" + std::string(tok) + "'");
      normal.push_back(value);
      p = q + 1;
    }
    if (spec.normals.empty()) spec.dimension = normal.size();
    require(normal.size() == spec.dimension, "arrangement normals differ in dimension");
    spec.normals.push_back(std::move(normal));
    start = end + 1;
  }
  return spec;
}

SignSystem central_arrangement_system(const ArrangementSpec& a) {
  const std::size_t n = a.normals.size(), d = a.dimension;
  require(n >= 1 && n <= 6, "arrangement must have between 1 and 6 hyperplanes");
  require(d >= 1 && d <= 4, "arrangement dimension must be between 1 and 4");
  for (const auto& normal : a.normals) {
    require(normal.size() == d, "normal length differs from dimension");
    require(std::any_of(normal.begin(), normal.end(), [](auto c) { return c != 0; }), "zero normal");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      bool parallel = true;
      for (std::size_t p = 0; p < d && parallel; ++p)
        for (std::size_t q = p + 1; q < d && parallel; ++q)
          if (a.normals[i][p] * a.normals[j][q] != a.normals[i][q] * a.normals[j][p]) parallel = false;
      require(!parallel, "normals " + std::to_string(i) + " and " + std::to_string(j) + " are parallel");
    }

  std::size_t candidates = 1;
  for (std::size_t i = 0; i < n; ++i) candidates *= 3;
  std::vector<SignVector> covectors;
  for (std::size_t code = 0; code < candidates; ++code) {
    SignVector x(n);
    std::vector<LinearConstraint> rows;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= 3) {
      const int sign = static_cast<int>(c % 3) - 1;
      x.set(i, sign);
      LinearConstraint row{a.normals[i], sign == 0 ? LinearConstraint::Relation::Zero : LinearConstraint::Relation::Positive};
      if (sign < 0)
        for (auto& coeff : row.coeffs) coeff = -coeff;
      rows.push_back(std::move(row));
    }
    if (feasible(std::move(rows), d)) covectors.push_back(std::move(x));
  }
  return SignSystem(n, std::move(covectors));
}

}  // namespace tope
