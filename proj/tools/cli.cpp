#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "tope/basepoint_order.hpp"
#include "tope/cell_complex.hpp"
#include "tope/generators.hpp"
#include "tope/harness.hpp"
#include "tope/io.hpp"
#include "tope/mediangle.hpp"
#include "tope/partial_cube.hpp"
#include "tope/sign_system.hpp"
#include "tope/zone.hpp"

namespace tope::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  bool timing = false;
  std::uint64_t seed = 1;
};

std::string read_input(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw UsageError("cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

bool looks_like_graph(const std::string& text) {
  auto it = std::find_if_not(text.begin(), text.end(), [](unsigned char c) { return std::isspace(c); });
  return it != text.end() && *it == '{';
}

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got \"" + s + "\"");
}

void emit(Context& ctx, const json& j) { ctx.out << j.dump() << "\n"; }

// --- generate -------------------------------------------------------------------

Graph product_factor(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw UsageError("product factor must look like kind:param, got \"" + spec + "\"");
  const std::string kind = spec.substr(0, colon);
  const std::string arg = spec.substr(colon + 1);
  if (kind == "hypercube") return hypercube(to_int(arg, "hypercube"));
  if (kind == "cycle") return even_cycle(to_int(arg, "cycle"));
  if (kind == "path") return path(to_int(arg, "path"));
  if (kind == "coxeter") return coxeter_cayley(CoxeterDiagram::parse(arg), arg);
  throw UsageError("unknown product factor \"" + kind + "\"");
}

ArrangementSpec arrangement_from(const std::string& spec) {
  if (spec == "uniform4") return uniform_four_plane_arrangement();
  if (spec.starts_with("coordinate:"))
    return coordinate_arrangement(static_cast<std::size_t>(to_int(spec.substr(11), "coordinate")));
  return parse_arrangement(spec);
}

int cmd_generate(Context& ctx, const std::string& family, const std::vector<std::string>& params) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw UsageError("generate " + family + " takes " + std::to_string(k) + " parameter(s)");
  };
  if (family == "arrangement") {
    need(1);
    ctx.out << serialize_system(central_arrangement_system(arrangement_from(params[0])));
    return kPass;
  }
  if (family == "tope-graph") {
    need(1);
    Graph g = topes_and_graph(parse_system(read_input(params[0], ctx.in))).graph;
    ctx.out << serialize_graph(g);
    return kPass;
  }
  Graph g = [&]() -> Graph {
    if (family == "hypercube") return need(1), hypercube(to_int(params[0], "d"));
    if (family == "cycle") return need(1), cycle(to_int(params[0], "n"));
    if (family == "path") return need(1), path(to_int(params[0], "n"));
    if (family == "grid") return need(2), grid(to_int(params[0], "a"), to_int(params[1], "b"));
    if (family == "bipartite") return need(2), complete_bipartite(to_int(params[0], "a"), to_int(params[1], "b"));
    if (family == "tree") return need(1), random_tree(to_int(params[0], "n"), ctx.seed);
    if (family == "coxeter") return need(1), coxeter_cayley(CoxeterDiagram::parse(params[0]), params[0]);
    if (family == "product") {
      if (params.size() < 2) throw UsageError("generate product needs at least two factors");
      Graph acc = product_factor(params[0]);
      std::string name = acc.name();
      for (std::size_t i = 1; i < params.size(); ++i) {
        Graph next = product_factor(params[i]);
        name += "x" + next.name();
        acc = cartesian_product(acc, next);
      }
      acc.set_name(name);
      return acc;
    }
    throw UsageError("unknown family \"" + family + "\"");
  }();
  ctx.out << serialize_graph(g);
  return kPass;
}

// --- check ------------------------------------------------------------------------

SignSystem system_from(const std::string& text) {
  if (!looks_like_graph(text)) return parse_system(text);
  const Graph g = parse_graph(text);
  auto recognition = recognize_partial_cube(g);
  if (auto* pc = std::get_if<PartialCube>(&recognition)) return reconstruct_system(g, pc->theta);
  throw UsageError("graph input is not a partial cube, so it has no reconstructed system");
}

int cmd_check(Context& ctx, const std::string& what, const std::string& input) {
  const std::string text = read_input(input, ctx.in);
  if (what == "partial-cube") {
    const Graph g = parse_graph(text);
    auto r = recognize_partial_cube(g);
    const bool ok = std::holds_alternative<PartialCube>(r);
    json j{{"is_partial_cube", ok}};
    if (ok) j["classes"] = std::get<PartialCube>(r).theta.class_count;
    else j["witness"] = witness_json(r);
    emit(ctx, j);
    return ok ? kPass : kFail;
  }
  if (what == "mediangle") {
    const Graph g = parse_graph(text);
    const MediangleVerdict v = is_bipartite_mediangle(g);
    json j{{"is_mediangle", v.is_mediangle}};
    if (!v.is_mediangle) j.update(witness_json(v));
    emit(ctx, j);
    return v.is_mediangle ? kPass : kFail;
  }
  if (what == "apiculate") {
    const Graph g = parse_graph(text);
    const auto w = apiculate_violation(g);
    json j{{"is_apiculate", !w}};
    if (w) j["witness"] = witness_json(*w);
    emit(ctx, j);
    return w ? kFail : kPass;
  }
  const SignSystem s = system_from(text);
  const AxiomReport axioms = check_axioms(s);
  if (what == "com" || what == "om") {
    const bool ok = what == "com" ? axioms.is_com() : axioms.is_om();
    json j{{"is_" + what, ok}, {"simple", axioms.simple()}, {"face_symmetry", axioms.fs()},
           {"strong_elimination", axioms.se()}, {"has_zero", axioms.has_zero}};
    if (!ok) j["witness"] = witness_json(axioms, s);
    emit(ctx, j);
    return ok ? kPass : kFail;
  }
  if (what == "simplicial") {
    if (!axioms.is_om()) {
      emit(ctx, json{{"applicable", false}, {"reason", "not an oriented matroid"}, {"witness", witness_json(axioms, s)}});
      return kNotApplicable;
    }
    const SimplicialityReport r = is_simplicial_om(s);
    json j{{"simplicial", r.simplicial}, {"rank", r.rank}, {"topes", r.topes.size()}};
    if (r.witness)
      j["witness"] = json{{"tope", r.topes[*r.witness].to_string()}, {"degree", r.degree[*r.witness]}};
    emit(ctx, j);
    return r.simplicial ? kPass : kFail;
  }
  throw UsageError("unknown check \"" + what + "\"");
}

// --- graph commands -----------------------------------------------------------------

std::optional<ThetaPartition> theta_or_report(Context& ctx, const Graph& g, Vertex root = 0) {
  auto r = recognize_partial_cube(g, root);
  if (auto* pc = std::get_if<PartialCube>(&r)) return std::move(pc->theta);
  emit(ctx, json{{"applicable", false}, {"reason", "not a partial cube"}, {"witness", witness_json(r)}});
  return std::nullopt;
}

int cmd_cells(Context& ctx, const std::string& input) {
  const Graph g = parse_graph(read_input(input, ctx.in));
  auto theta = theta_or_report(ctx, g);
  if (!theta) return kNotApplicable;
  const auto cells = enumerate_cells(g, *theta);
  std::vector<SignVector> covectors;
  for (const auto& c : cells) covectors.push_back(c.covector);
  const SignSystem s(theta->class_count, covectors);
  const auto ranks = cell_ranks(cells, s, face_lattice(s));
  std::map<int, std::size_t> census;
  for (int r : ranks) ++census[r];
  json by_rank = json::object();
  for (auto [r, k] : census) by_rank[std::to_string(r)] = k;
  emit(ctx, json{{"cells", cells.size()}, {"by_rank", by_rank}, {"euler_characteristic", euler_characteristic(cells, ranks)}});
  return kPass;
}

int cmd_reconstruct(Context& ctx, const std::string& input, int root) {
  const Graph g = parse_graph(read_input(input, ctx.in));
  if (root < 0) throw UsageError("--root must be non-negative");
  g.require_vertex(static_cast<Vertex>(root));
  auto theta = theta_or_report(ctx, g, static_cast<Vertex>(root));
  if (!theta) return kNotApplicable;
  ctx.out << serialize_system(reconstruct_system(g, *theta));
  return kPass;
}

int report_exit(Context& ctx, const VerdictReport& r) {
  emit(ctx, r.to_json(ctx.timing));
  if (!r.applicable) return kNotApplicable;
  return r.summary() ? kPass : kFail;
}

int cmd_verify(Context& ctx, const std::string& what, const std::string& input) {
  const Graph g = parse_graph(read_input(input, ctx.in));
  if (what == "theorem1") return report_exit(ctx, verify_theorem1(g));
  if (what == "theorem2") return report_exit(ctx, verify_theorem2(g));
  if (what == "lemmas") {
    LemmaOptions options;
    options.seed = ctx.seed;
    return report_exit(ctx, verify_lemma_suite(g, options));
  }
  throw UsageError("unknown verification \"" + what + "\"");
}

int cmd_zone(Context& ctx, const std::string& input, std::size_t cls) {
  const Graph g = parse_graph(read_input(input, ctx.in));
  auto theta = theta_or_report(ctx, g);
  if (!theta) return kNotApplicable;
  if (cls >= theta->class_count)
    throw UsageError("--class must be below " + std::to_string(theta->class_count));
  ctx.out << serialize_graph(zone_graph(g, *theta, enumerate_convex_cycles(g, *theta), cls));
  return kPass;
}

struct ExploreArgs {
  std::optional<int> z, u;
  std::vector<int> s;
  std::size_t samples = 20;
  std::size_t cls = 0;
};

int cmd_explore(Context& ctx, const std::string& what, const std::string& input, const ExploreArgs& a) {
  const Graph g = parse_graph(read_input(input, ctx.in));
  const MediangleVerdict verdict = is_bipartite_mediangle(g);
  if (!verdict.is_mediangle) {
    emit(ctx, json{{"applicable", false}, {"reason", "not bipartite mediangle"}, {"witness", witness_json(verdict)}});
    return kNotApplicable;
  }
  if (what == "zone") {
    if (a.cls >= require_partial_cube(g).class_count) throw UsageError("--class out of range");
    return report_exit(ctx, explore_zone_mediangle(g, a.cls));
  }
  if (what != "downward") throw UsageError("unknown explorer \"" + what + "\"");
  if (a.z.has_value() != a.u.has_value()) throw UsageError("--z and --u go together");
  if (!a.z) return report_exit(ctx, explore_downward_sample(g, ctx.seed, a.samples));

  auto vertex = [&](int v) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.vertex_count()) throw UsageError("vertex out of range");
    return static_cast<Vertex>(v);
  };
  const Vertex z = vertex(*a.z), u = vertex(*a.u);
  VertexSet s(g.vertex_count());
  for (int x : a.s) s.insert(vertex(x));
  auto cell = explore_downward_cell(g, z, u, s);
  json j{{"z", z}, {"u", u}, {"S", s.members()}, {"found", cell.has_value()}};
  if (cell) j["cell"] = cell->members;
  emit(ctx, j);
  return kPass;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mediangle graphs, partial cubes and oriented matroid covector systems", "tope"};
  app.require_subcommand(1);
  Context ctx{in, out};
  app.add_flag("--timing", ctx.timing, "Include elapsed time in reports");
  app.add_option("--seed", ctx.seed, "Seed for all sampling")->capture_default_str();
  app.fallthrough();

  std::string family, what, input;
  std::vector<std::string> params;
  int root = 0;
  std::size_t cls = 0;
  ExploreArgs explore;

  auto* gen = app.add_subcommand("generate", "Write a generated graph or sign system");
  gen->add_option("family", family,
                  "hypercube D | cycle N | path N | grid A B | bipartite A B | tree N | coxeter TYPE | "
                  "product KIND:P ... | arrangement SPEC | tope-graph SYSTEM")
      ->required();
  gen->add_option("params", params, "Family parameters");

  auto* check = app.add_subcommand("check", "Decide one property of a graph or sign system");
  check->add_option("property", what)
      ->required()
      ->check(CLI::IsMember({"partial-cube", "mediangle", "apiculate", "com", "om", "simplicial"}));
  check->add_option("input", input, "Graph or sign-system file, - for stdin")->required();

  auto* cells = app.add_subcommand("cells", "Cell census by face rank");
  cells->add_option("graph", input)->required();

  auto* recon = app.add_subcommand("reconstruct", "Covector system of a partial cube");
  recon->add_option("graph", input)->required();
  recon->add_option("--root", root, "Vertex whose tope is all positive")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run a theorem or lemma check");
  verify->add_option("target", what)->required()->check(CLI::IsMember({"theorem1", "theorem2", "lemmas"}));
  verify->add_option("graph", input)->required();

  auto* zone = app.add_subcommand("zone", "Zone graph of a Θ-class");
  zone->add_option("graph", input)->required();
  zone->add_option("--class", cls)->required();

  auto* exp = app.add_subcommand("explore", "Exploratory searches");
  exp->add_option("explorer", what)->required()->check(CLI::IsMember({"downward", "zone"}));
  exp->add_option("graph", input)->required();
  exp->add_option("--z", explore.z);
  exp->add_option("--u", explore.u);
  exp->add_option("--s", explore.s)->delimiter(',');
  exp->add_option("--samples", explore.samples)->capture_default_str();
  exp->add_option("--class", explore.cls);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen) return cmd_generate(ctx, family, params);
    if (*check) return cmd_check(ctx, what, input);
    if (*cells) return cmd_cells(ctx, input);
    if (*recon) return cmd_reconstruct(ctx, input, root);
    if (*verify) return cmd_verify(ctx, what, input);
    if (*zone) return cmd_zone(ctx, input, cls);
    if (*exp) return cmd_explore(ctx, what, input, explore);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace tope::cli
