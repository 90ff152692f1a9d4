#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "tope/cell_complex.hpp"
#include "tope/graph.hpp"

namespace tope {

/// Structured result of a theorem or lemma check on one subject.
///
/// Theorems are implications: when the hypothesis fails the report is marked
/// not applicable, which is distinct from a failed conclusion.
struct VerdictReport {
  struct Check {
    std::string name;
    bool pass = false;
    nlohmann::json witness;  // null when passing
  };

  std::string subject;
  bool applicable = true;
  /// Explorer reports carry data only; their summary is always true.
  bool exploratory = false;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  std::chrono::duration<double, std::milli> elapsed{0};

  bool summary() const;
  void add(std::string name, bool pass, nlohmann::json witness = nullptr);
  /// Elapsed time is omitted unless requested, keeping output reproducible.
  nlohmann::json to_json(bool with_timing = false) const;
};

VerdictReport verify_theorem1(const Graph& g);

/// Needs a partial cube that is antipodal; otherwise not applicable.
/// data: P1 (mediangle), P2 (apiculate), P3 (simplicial OM), equivalent.
VerdictReport verify_theorem2(const Graph& g);

struct LemmaOptions {
  std::uint64_t seed = 1;
  /// Check every vertex pair when n is at most this, else sample.
  std::size_t exhaustive_limit = 200;
  std::size_t sampled_pairs = 500;
};

VerdictReport verify_lemma_suite(const Graph& g, const LemmaOptions& options = {});

/// A cell C ⊆ interval(u, z) with z ∈ C and N(z) ∩ C = s, smallest first.
/// Throws std::invalid_argument if s ⊄ N(z) ∩ interval(z, u) or g is not bipartite mediangle.
std::optional<Cell> explore_downward_cell(const Graph& g, Vertex z, Vertex u, const VertexSet& s);

/// Seeded sample of (z, u, S) triples, one row per triple.
VerdictReport explore_downward_sample(const Graph& g, std::uint64_t seed, std::size_t samples);

/// Zone graph of `cls` and whether it is bipartite mediangle (exploratory).
VerdictReport explore_zone_mediangle(const Graph& g, std::size_t cls);

}  // namespace tope
