#include "tope/harness.hpp"

#include <algorithm>
#include <random>

#include "tope/basepoint_order.hpp"
#include "tope/io.hpp"
#include "tope/mediangle.hpp"
#include "tope/partial_cube.hpp"
#include "tope/sign_system.hpp"
#include "tope/zone.hpp"

namespace tope {

using nlohmann::json;

bool VerdictReport::summary() const {
  if (exploratory) return true;
  return applicable && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerdictReport::add(std::string name, bool pass, json witness) {
  checks.push_back(Check{std::move(name), pass, pass ? json(nullptr) : std::move(witness)});
}

json VerdictReport::to_json(bool with_timing) const {
  json out;
  out["subject"] = subject;
  out["applicable"] = applicable;
  out["summary"] = summary();
  json list = json::array();
  for (const auto& c : checks) {
    json entry{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    list.push_back(std::move(entry));
  }
  out["checks"] = std::move(list);
  for (const auto& [key, value] : data.items()) out[key] = value;
  if (exploratory) out["exploratory"] = true;
  if (with_timing) out["elapsed_ms"] = elapsed.count();
  return out;
}

namespace {

class Stopwatch {
 public:
  explicit Stopwatch(VerdictReport& report) : report_(report), start_(std::chrono::steady_clock::now()) {}
  ~Stopwatch() { report_.elapsed = std::chrono::steady_clock::now() - start_; }

 private:
  VerdictReport& report_;
  std::chrono::steady_clock::time_point start_;
};

std::string subject_of(const Graph& g) { return g.name().empty() ? "graph" : g.name(); }

// Checks that v -> tope_of(v) is a bijection onto the topes that preserves
// adjacency in both directions. Returns a witness on failure.
std::optional<json> labelling_mismatch(const Graph& g, const ThetaPartition& theta, const TopeGraph& tg) {
  if (tg.topes.size() != g.vertex_count())
    return json{{"vertices", g.vertex_count()}, {"topes", tg.topes.size()}};
  std::vector<Vertex> image(g.vertex_count());
  std::vector<bool> hit(tg.topes.size(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const SignVector t = tope_of(theta, v);
    auto it = std::find(tg.topes.begin(), tg.topes.end(), t);
    if (it == tg.topes.end()) return json{{"vertex", v}, {"label", t.to_string()}, {"reason", "not a tope"}};
    image[v] = static_cast<Vertex>(it - tg.topes.begin());
    if (hit[image[v]]) return json{{"vertex", v}, {"reason", "label reused"}};
    hit[image[v]] = true;
  }
  if (tg.graph.edge_count() != g.edge_count())
    return json{{"edges", g.edge_count()}, {"tope_edges", tg.graph.edge_count()}};
  for (const Edge& e : g.edges())
    if (!tg.graph.adjacent(image[e.u], image[e.v])) return json{{"edge", {e.u, e.v}}, {"reason", "not adjacent as topes"}};
  return std::nullopt;
}

}  // namespace

VerdictReport verify_theorem1(const Graph& g) {
  VerdictReport report;
  report.subject = subject_of(g);
  Stopwatch timer(report);

  const MediangleVerdict hypothesis = is_bipartite_mediangle(g);
  report.add("hypothesis: bipartite mediangle", hypothesis.is_mediangle, witness_json(hypothesis));
  if (!hypothesis.is_mediangle) {
    report.applicable = false;
    return report;
  }

  const ThetaPartition theta = require_partial_cube(g);
  const std::vector<Cell> cells = enumerate_cells(g, theta);
  std::vector<SignVector> covectors;
  for (const auto& c : cells) covectors.push_back(c.covector);
  const SignSystem system(theta.class_count, covectors);
  const AxiomReport axioms = check_axioms(system);
  const json axiom_witness = witness_json(axioms, system);
  report.add("simple", axioms.simple(), axiom_witness);
  report.add("face symmetry (FS)", axioms.fs(), axiom_witness);
  report.add("strong elimination (SE)", axioms.se(), axiom_witness);

  try {
    const TopeGraph tg = topes_and_graph(system);
    auto mismatch = labelling_mismatch(g, theta, tg);
    report.add("vertex-to-tope isomorphism", !mismatch, mismatch.value_or(nullptr));
  } catch (const GraphError& e) {
    report.add("vertex-to-tope isomorphism", false, json{{"error", e.what()}});
  }

  const FaceLattice lattice = face_lattice(system, axioms.is_com());
  const long chi = euler_characteristic(cells, cell_ranks(cells, system, lattice));
  report.add("euler characteristic = 1", chi == 1, json{{"euler_characteristic", chi}});

  report.data["covectors"] = system.size();
  report.data["cells"] = cells.size();
  report.data["rank"] = lattice.top_rank;
  report.data["euler_characteristic"] = chi;
  return report;
}

VerdictReport verify_theorem2(const Graph& g) {
  VerdictReport report;
  report.subject = subject_of(g);
  Stopwatch timer(report);

  auto recognition = recognize_partial_cube(g);
  auto* pc = std::get_if<PartialCube>(&recognition);
  report.add("hypothesis: partial cube", pc != nullptr, witness_json(recognition));
  if (pc == nullptr) {
    report.applicable = false;
    return report;
  }
  const bool antipodal = is_antipodal_subgraph(g, VertexSet::full(g.vertex_count()));
  report.add("hypothesis: antipodal", antipodal, json{{"reason", "some vertex has no antipode"}});
  if (!antipodal) {
    report.applicable = false;
    return report;
  }

  const MediangleVerdict med = is_bipartite_mediangle(g);
  const bool p1 = med.is_mediangle;

  const auto api = apiculate_violation(g);
  const bool p2 = !api;

  const SignSystem system = reconstruct_system(g, pc->theta);
  const AxiomReport axioms = check_axioms(system);
  bool p3 = false;
  json p3_witness;
  if (!axioms.is_om()) {
    p3_witness = json{{"not_om", witness_json(axioms, system)}};
  } else {
    const SimplicialityReport simp = is_simplicial_om(system);
    p3 = simp.simplicial;
    if (!p3) {
      const std::size_t t = *simp.witness;
      p3_witness = json{{"tope", simp.topes[t].to_string()}, {"degree", simp.degree[t]}, {"rank", simp.rank}};
    }
  }

  const bool equivalent = p1 == p2 && p2 == p3;
  report.add("P1 = P2 = P3", equivalent,
             json{{"P1_witness", witness_json(med)}, {"P2_witness", api ? witness_json(*api) : json(nullptr)},
                  {"P3_witness", p3_witness}});

  // Counterexamples are re-checked against the raw definitions.
  if (auto* w = std::get_if<CycleConditionWitness>(&med.witness))
    report.add("P1 witness re-validates", revalidate(g, *w), witness_json(*w));
  if (api) report.add("P2 witness re-validates", revalidate(g, *api), witness_json(*api));

  report.data["P1"] = p1;
  report.data["P2"] = p2;
  report.data["P3"] = p3;
  report.data["equivalent"] = equivalent;
  return report;
}

VerdictReport verify_lemma_suite(const Graph& g, const LemmaOptions& options) {
  VerdictReport report;
  report.subject = subject_of(g);
  Stopwatch timer(report);

  const MediangleVerdict med = is_bipartite_mediangle(g);
  const auto api = apiculate_violation(g);
  const bool partial_cube = std::holds_alternative<PartialCube>(recognize_partial_cube(g));
  report.data["mediangle"] = med.is_mediangle;
  report.data["apiculate"] = !api;

  if (med.is_mediangle) {
    json bad_cycle;
    for (const auto& c : med.cycles) {
      const auto m = c.members();
      VertexSet s(g.vertex_count(), std::span<const Vertex>(m.data(), m.size()));
      if (auto u = gatedness_violation(g, s)) {
        bad_cycle = json{{"cycle", std::vector<Vertex>(c.vertices().begin(), c.vertices().end())}, {"vertex", *u}};
        break;
      }
    }
    report.add("convex cycles gated", bad_cycle.is_null(), bad_cycle);

    std::vector<std::pair<Vertex, Vertex>> pairs;
    const std::size_t n = g.vertex_count();
    if (n <= options.exhaustive_limit) {
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    } else {
      std::mt19937_64 rng(options.seed);
      std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
      for (std::size_t i = 0; i < options.sampled_pairs; ++i) pairs.emplace_back(pick(rng), pick(rng));
    }
    json bad_interval;
    for (auto [u, v] : pairs) {
      const Graph sub = g.induced(interval(g, u, v));
      if (!is_bipartite_mediangle(sub).is_mediangle) {
        bad_interval = json{{"u", u}, {"v", v}};
        break;
      }
    }
    report.add("intervals are mediangle", bad_interval.is_null(), bad_interval);
    report.data["intervals_checked"] = pairs.size();

    report.add("mediangle implies apiculate", !api, api ? witness_json(*api) : json(nullptr));
  }

  if (!api && partial_cube) {
    json ungated;
    std::size_t count = 0;
    for (const auto& a : enumerate_antipodal_intervals(g)) {
      ++count;
      if (!a.gated && ungated.is_null()) ungated = json{{"low", a.low}, {"high", a.high}};
    }
    report.add("antipodal intervals gated", ungated.is_null(), ungated);
    report.data["antipodal_intervals"] = count;
  }

  if (report.checks.empty()) report.applicable = false;
  return report;
}

std::optional<Cell> explore_downward_cell(const Graph& g, Vertex z, Vertex u, const VertexSet& s) {
  g.require_vertex(z);
  g.require_vertex(u);
  if (s.universe() != g.vertex_count()) throw std::invalid_argument("vertex set universe does not match graph");
  for (Vertex x : s.members())
    if (!g.adjacent(z, x) || !between(g, z, x, u)) throw std::invalid_argument("S must lie in N(z) ∩ [z,u]");
  if (!is_bipartite_mediangle(g).is_mediangle) throw std::invalid_argument("graph is not bipartite mediangle");

  const ThetaPartition theta = require_partial_cube(g);
  for (auto& cell : enumerate_cells(g, theta)) {
    if (!cell.vertices.contains(z)) continue;
    bool inside = true;
    for (Vertex x : cell.members)
      if (!between(g, u, x, z)) {
        inside = false;
        break;
      }
    if (!inside) continue;
    VertexSet trace(g.vertex_count());
    for (Vertex x : g.neighbors(z))
      if (cell.vertices.contains(x)) trace.insert(x);
    if (trace == s) return std::move(cell);
  }
  return std::nullopt;
}

VerdictReport explore_downward_sample(const Graph& g, std::uint64_t seed, std::size_t samples) {
  VerdictReport report;
  report.subject = subject_of(g);
  report.exploratory = true;
  Stopwatch timer(report);

  std::mt19937_64 rng(seed);
  const auto n = static_cast<Vertex>(g.vertex_count());
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  json rows = json::array();
  std::size_t found = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vertex z = pick(rng), u = pick(rng);
    std::vector<Vertex> down;
    for (Vertex x : g.neighbors(z))
      if (between(g, z, x, u)) down.push_back(x);
    VertexSet s(g.vertex_count());
    for (Vertex x : down)
      if (rng() & 1) s.insert(x);
    auto cell = explore_downward_cell(g, z, u, s);
    if (cell) ++found;
    rows.push_back(json{{"z", z}, {"u", u}, {"S", s.members()},
                        {"cell", cell ? json(cell->members) : json(nullptr)}});
  }
  report.add("downward cell search", true);
  report.data["samples"] = std::move(rows);
  report.data["found"] = found;
  report.data["not_found"] = samples - found;
  return report;
}

VerdictReport explore_zone_mediangle(const Graph& g, std::size_t cls) {
  VerdictReport report;
  report.subject = subject_of(g) + " class " + std::to_string(cls);
  report.exploratory = true;
  Stopwatch timer(report);

  const ThetaPartition theta = require_partial_cube(g);
  const auto cycles = enumerate_convex_cycles(g, theta);
  const Graph zone = zone_graph(g, theta, cycles, cls);
  const MediangleVerdict verdict = is_bipartite_mediangle(zone);
  std::size_t min_deg = zone.vertex_count(), max_deg = 0;
  for (Vertex v = 0; v < zone.vertex_count(); ++v) {
    min_deg = std::min(min_deg, zone.degree(v));
    max_deg = std::max(max_deg, zone.degree(v));
  }
  report.add("zone graph built", true);
  report.data["class"] = cls;
  report.data["zone_vertices"] = zone.vertex_count();
  report.data["zone_edges"] = zone.edge_count();
  report.data["min_degree"] = min_deg;
  report.data["max_degree"] = max_deg;
  report.data["zone_is_mediangle"] = verdict.is_mediangle;
  if (!verdict.is_mediangle) report.data["zone_witness"] = witness_json(verdict);
  return report;
}

}  // namespace tope
