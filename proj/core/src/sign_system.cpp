#include "tope/sign_system.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace tope {

SignSystem::SignSystem(std::size_t ground_size, std::vector<SignVector> covectors,
                       std::vector<std::string> element_names)
    : ground_size_(ground_size), covectors_(std::move(covectors)), element_names_(std::move(element_names)) {
  for (const auto& x : covectors_)
    if (x.size() != ground_size_) throw std::invalid_argument("covector length differs from ground size");
  if (!element_names_.empty() && element_names_.size() != ground_size_)
    throw std::invalid_argument("element name count differs from ground size");
  std::sort(covectors_.begin(), covectors_.end());
  covectors_.erase(std::unique(covectors_.begin(), covectors_.end()), covectors_.end());
}

bool SignSystem::contains(const SignVector& x) const { return index_of(x).has_value(); }

std::optional<std::size_t> SignSystem::index_of(const SignVector& x) const {
  auto it = std::lower_bound(covectors_.begin(), covectors_.end(), x);
  if (it == covectors_.end() || !(*it == x)) return std::nullopt;
  return static_cast<std::size_t>(it - covectors_.begin());
}

// --- axioms ------------------------------------------------------------------

AxiomReport check_axioms(const SignSystem& s) {
  AxiomReport report;
  const std::size_t k = s.ground_size();
  const auto& L = s.covectors();

  for (std::size_t e = 0; e < k && !report.not_simple; ++e) {
    std::array<bool, 3> seen{};
    for (const auto& x : L) seen[x[e] + 1] = true;
    if (!(seen[0] && seen[1] && seen[2])) report.not_simple = e;
  }

  report.has_zero = std::any_of(L.begin(), L.end(), [](const SignVector& x) { return x.is_zero(); });

  for (std::size_t i = 0; i < L.size() && !report.face_symmetry; ++i)
    for (std::size_t j = 0; j < L.size(); ++j)
      if (!s.contains(compose(L[i], -L[j]))) {
        report.face_symmetry = FaceSymmetryViolation{i, j};
        break;
      }

  std::vector<std::uint8_t> in_sep(k), covered(k);
  for (std::size_t i = 0; i < L.size() && !report.strong_elimination; ++i) {
    for (std::size_t j = i + 1; j < L.size(); ++j) {
      const auto sep = separator(L[i], L[j]);
      if (sep.empty()) continue;
      const SignVector target = compose(L[i], L[j]);
      std::fill(in_sep.begin(), in_sep.end(), 0);
      std::fill(covered.begin(), covered.end(), 0);
      for (auto e : sep) in_sep[e] = 1;
      std::size_t remaining = sep.size();
      for (const auto& z : L) {
        bool agrees = true;
        for (std::size_t f = 0; f < k && agrees; ++f)
          if (!in_sep[f] && z[f] != target[f]) agrees = false;
        if (!agrees) continue;
        for (auto e : sep) {
          if (z[e] == 0 && !covered[e]) {
            covered[e] = 1;
            --remaining;
          }
        }
        if (remaining == 0) break;
      }
      if (remaining != 0) {
        auto e = *std::find_if(sep.begin(), sep.end(), [&](std::size_t f) { return !covered[f]; });
        report.strong_elimination = EliminationViolation{i, j, e};
        break;
      }
    }
  }
  return report;
}

// --- face lattice --------------------------------------------------------------

bool FaceLattice::leq(std::size_t i, std::size_t j) const {
  return i == j || std::binary_search(below.at(j).begin(), below.at(j).end(), i);
}

std::vector<std::pair<std::size_t, std::size_t>> FaceLattice::order() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < below.size(); ++j)
    for (auto i : below[j]) out.emplace_back(i, j);
  std::sort(out.begin(), out.end());
  return out;
}

FaceLattice face_lattice(const SignSystem& s, std::optional<bool> known_com) {
  const auto& L = s.covectors();
  const std::size_t n = L.size();
  FaceLattice lattice;
  lattice.is_com = known_com ? *known_com : check_axioms(s).is_com();
  lattice.below.assign(n, {});
  std::vector<std::vector<std::size_t>> above(n);

  std::vector<std::size_t> support(n);
  for (std::size_t i = 0; i < n; ++i) support[i] = L[i].support().size();
  std::vector<std::size_t> by_support(n);
  std::iota(by_support.begin(), by_support.end(), 0);
  std::stable_sort(by_support.begin(), by_support.end(),
                   [&](std::size_t a, std::size_t b) { return support[a] < support[b]; });

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (support[i] < support[j] && face_leq(L[i], L[j])) {
        lattice.below[j].push_back(i);
        above[i].push_back(j);
      }

  lattice.rank_of.assign(n, 0);
  for (auto j : by_support)
    for (auto i : lattice.below[j]) lattice.rank_of[j] = std::max(lattice.rank_of[j], lattice.rank_of[i] + 1);

  lattice.face_rank.assign(n, 0);
  for (auto it = by_support.rbegin(); it != by_support.rend(); ++it)
    for (auto j : above[*it]) lattice.face_rank[*it] = std::max(lattice.face_rank[*it], lattice.face_rank[j] + 1);

  for (std::size_t i = 0; i < n; ++i) {
    lattice.top_rank = std::max(lattice.top_rank, lattice.rank_of[i]);
    if (above[i].empty()) lattice.topes.push_back(i);
  }
  return lattice;
}

// --- topes ---------------------------------------------------------------------

TopeGraph topes_and_graph(const SignSystem& s) {
  const auto& L = s.covectors();
  std::vector<SignVector> topes;
  for (std::size_t i = 0; i < L.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < L.size() && maximal; ++j)
      if (j != i && face_leq(L[i], L[j])) maximal = false;
    if (maximal) topes.push_back(L[i]);
  }
  if (topes.empty()) throw std::invalid_argument("sign system has no covectors");
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < topes.size(); ++a)
    for (std::size_t b = a + 1; b < topes.size(); ++b)
      if (separator(topes[a], topes[b]).size() == 1)
        edges.push_back(Edge{static_cast<Vertex>(a), static_cast<Vertex>(b)});
  Graph graph(topes.size(), edges, "topes");
  return TopeGraph{std::move(topes), std::move(graph)};
}

// --- simpliciality -----------------------------------------------------------------

SimplicialityReport is_simplicial_om(const SignSystem& s) {
  if (!check_axioms(s).is_om()) throw std::invalid_argument("simpliciality requires an oriented matroid");
  const FaceLattice lattice = face_lattice(s, true);
  TopeGraph tg = topes_and_graph(s);

  SimplicialityReport report;
  report.rank = lattice.top_rank;
  report.topes = tg.topes;
  const int r = lattice.top_rank;
  if (r > 62) throw std::invalid_argument("rank too large for Boolean-interval check");
  const std::size_t zero = *s.index_of(SignVector(s.ground_size()));

  for (Vertex v = 0; v < tg.topes.size(); ++v) {
    const int degree = static_cast<int>(tg.graph.degree(v));
    const bool by_degree = degree == r;

    // Lower interval [0, T]: Boolean iff its atoms number r and
    // X -> {atoms below X} is an order isomorphism onto all subsets.
    const std::size_t t = *s.index_of(tg.topes[v]);
    std::vector<std::size_t> lower = lattice.below[t];
    lower.push_back(t);
    std::vector<std::size_t> atoms;
    for (auto x : lower)
      if (lattice.below[x].size() == 1 && lattice.below[x][0] == zero) atoms.push_back(x);

    bool boolean = static_cast<int>(atoms.size()) == r && lower.size() == (std::size_t{1} << r);
    std::vector<std::uint64_t> mask(lower.size(), 0);
    for (std::size_t a = 0; a < lower.size() && boolean; ++a)
      for (std::size_t b = 0; b < atoms.size(); ++b)
        if (lattice.leq(atoms[b], lower[a])) mask[a] |= std::uint64_t{1} << b;
    if (boolean) {
      std::vector<std::uint64_t> sorted = mask;
      std::sort(sorted.begin(), sorted.end());
      boolean = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    for (std::size_t a = 0; a < lower.size() && boolean; ++a)
      for (std::size_t b = 0; b < lower.size() && boolean; ++b)
        if (lattice.leq(lower[a], lower[b]) != ((mask[a] & ~mask[b]) == 0)) boolean = false;

    report.degree.push_back(degree);
    report.boolean_interval.push_back(boolean);
    if (by_degree != boolean)
      throw SimplicialityDisagreement("simpliciality criteria disagree on tope " + tg.topes[v].to_string(), v);
    if (!by_degree && !report.witness) report.witness = v;
  }
  report.simplicial = !report.witness;
  return report;
}

// --- minors ------------------------------------------------------------------------

namespace {

std::vector<std::size_t> normalise_elements(const SignSystem& s, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  if (!elements.empty() && elements.back() >= s.ground_size()) throw std::out_of_range("element out of range");
  if (elements.size() == s.ground_size()) throw std::invalid_argument("cannot remove the whole ground set");
  return elements;
}

std::vector<std::string> remaining_names(const SignSystem& s, const std::vector<std::size_t>& removed) {
  if (s.element_names().empty()) return {};
  std::vector<std::string> names;
  for (std::size_t e = 0; e < s.ground_size(); ++e)
    if (!std::binary_search(removed.begin(), removed.end(), e)) names.push_back(s.element_names()[e]);
  return names;
}

}  // namespace

SignSystem delete_elements(const SignSystem& s, std::vector<std::size_t> elements) {
  elements = normalise_elements(s, std::move(elements));
  std::vector<SignVector> out;
  out.reserve(s.size());
  for (const auto& x : s.covectors()) out.push_back(remove_elements(x, elements));
  return SignSystem(s.ground_size() - elements.size(), std::move(out), remaining_names(s, elements));
}

SignSystem contract_elements(const SignSystem& s, std::vector<std::size_t> elements) {
  elements = normalise_elements(s, std::move(elements));
  std::vector<SignVector> out;
  for (const auto& x : s.covectors())
    if (std::all_of(elements.begin(), elements.end(), [&](std::size_t e) { return x[e] == 0; }))
      out.push_back(remove_elements(x, elements));
  if (out.empty()) throw std::invalid_argument("contraction is empty");
  return SignSystem(s.ground_size() - elements.size(), std::move(out), remaining_names(s, elements));
}

SimplifiedSystem simplify(const SignSystem& s) {
  const auto& L = s.covectors();
  const std::size_t k = s.ground_size();
  auto column = [&](std::size_t e) {
    std::vector<int> col;
    col.reserve(L.size());
    for (const auto& x : L) col.push_back(x[e]);
    return col;
  };
  std::vector<std::size_t> kept;
  std::vector<std::vector<int>> kept_columns;
  for (std::size_t e = 0; e < k; ++e) {
    auto col = column(e);
    if (std::all_of(col.begin(), col.end(), [](int v) { return v == 0; })) continue;
    auto neg = col;
    for (auto& v : neg) v = -v;
    bool parallel = std::any_of(kept_columns.begin(), kept_columns.end(),
                                [&](const auto& c) { return c == col || c == neg; });
    if (parallel) continue;
    kept.push_back(e);
    kept_columns.push_back(std::move(col));
  }
  if (kept.empty()) throw std::invalid_argument("every element is a loop");
  std::vector<std::size_t> removed;
  for (std::size_t e = 0; e < k; ++e)
    if (!std::binary_search(kept.begin(), kept.end(), e)) removed.push_back(e);
  std::vector<SignVector> out;
  for (const auto& x : L) out.push_back(remove_elements(x, removed));
  return SimplifiedSystem{SignSystem(kept.size(), std::move(out), remaining_names(s, removed)), kept};
}

}  // namespace tope
