#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tope/graph.hpp"
#include "tope/sign_vector.hpp"

namespace tope {

/// A finite set of sign vectors over a common ground set, kept sorted in
/// canonical order without duplicates.
class SignSystem {
 public:
  SignSystem() = default;
  /// Sorts and removes duplicates. Throws if the vectors disagree in size.
  SignSystem(std::size_t ground_size, std::vector<SignVector> covectors, std::vector<std::string> element_names = {});

  std::size_t ground_size() const { return ground_size_; }
  std::size_t size() const { return covectors_.size(); }
  const std::vector<SignVector>& covectors() const { return covectors_; }
  const SignVector& operator[](std::size_t i) const { return covectors_[i]; }
  const std::vector<std::string>& element_names() const { return element_names_; }

  bool contains(const SignVector& x) const;
  std::optional<std::size_t> index_of(const SignVector& x) const;

  friend bool operator==(const SignSystem& a, const SignSystem& b) {
    return a.ground_size_ == b.ground_size_ && a.covectors_ == b.covectors_;
  }

 private:
  std::size_t ground_size_ = 0;
  std::vector<SignVector> covectors_;
  std::vector<std::string> element_names_;
};

/// Strong elimination fails for covectors x, y at separator element e.
struct EliminationViolation {
  std::size_t x;
  std::size_t y;
  std::size_t element;
};

/// x ∘ (-y) is missing.
struct FaceSymmetryViolation {
  std::size_t x;
  std::size_t y;
};

struct AxiomReport {
  /// Least element not attaining all of -, 0, +.
  std::optional<std::size_t> not_simple;
  std::optional<FaceSymmetryViolation> face_symmetry;
  std::optional<EliminationViolation> strong_elimination;
  bool has_zero = false;

  bool simple() const { return !not_simple; }
  bool fs() const { return !face_symmetry; }
  bool se() const { return !strong_elimination; }
  bool is_com() const { return simple() && fs() && se(); }
  bool is_om() const { return is_com() && has_zero; }
};

/// All witnesses are the least ones in covector-index order.
AxiomReport check_axioms(const SignSystem& s);

/// The big face (semi)lattice without its artificial top.
struct FaceLattice {
  /// below[j]: sorted indices i with covector i < covector j.
  std::vector<std::vector<std::size_t>> below;
  /// Longest chain from a minimal covector (grade from the bottom).
  std::vector<int> rank_of;
  /// Longest chain up to a tope: the rank of the OM Face(X).
  std::vector<int> face_rank;
  int top_rank = 0;
  std::vector<std::size_t> topes;
  bool is_com = false;

  bool leq(std::size_t i, std::size_t j) const;
  /// Strict order pairs (i, j) with covector i < covector j.
  std::vector<std::pair<std::size_t, std::size_t>> order() const;
};

/// When `known_com` is not given, the axioms are checked to fill `is_com`.
FaceLattice face_lattice(const SignSystem& s, std::optional<bool> known_com = std::nullopt);

struct TopeGraph {
  std::vector<SignVector> topes;
  Graph graph;
};

/// Topes are the maximal covectors; adjacency iff the separator has one element.
/// Throws GraphError when the tope graph is disconnected.
TopeGraph topes_and_graph(const SignSystem& s);

/// Raised when the two simpliciality criteria disagree on a tope.
class SimplicialityDisagreement : public std::logic_error {
 public:
  SimplicialityDisagreement(const std::string& what, std::size_t tope) : std::logic_error(what), tope(tope) {}
  std::size_t tope;
};

struct SimplicialityReport {
  bool simplicial = false;
  int rank = 0;
  /// Index into `topes` of the least non-simplicial tope.
  std::optional<std::size_t> witness;
  std::vector<SignVector> topes;
  std::vector<int> degree;
  std::vector<bool> boolean_interval;
};

/// Evaluates, per tope, both "degree equals rank" and "[0, T] is Boolean".
/// Throws std::invalid_argument for non-OM input and SimplicialityDisagreement
/// when the criteria differ.
SimplicialityReport is_simplicial_om(const SignSystem& s);

/// Restriction of every covector to the complement of `elements`.
SignSystem delete_elements(const SignSystem& s, std::vector<std::size_t> elements);

/// {X \ A : X in L, X_A = 0}.
SignSystem contract_elements(const SignSystem& s, std::vector<std::size_t> elements);

/// Loops removed and each parallel class (equal or opposite columns)
/// reduced to its first element.
struct SimplifiedSystem {
  SignSystem system;
  std::vector<std::size_t> kept;
};

SimplifiedSystem simplify(const SignSystem& s);

}  // namespace tope
