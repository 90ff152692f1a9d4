#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tope {

/// A map from a finite ground set {0, ..., k-1} to {-1, 0, +1}.
class SignVector {
 public:
  SignVector() = default;
  explicit SignVector(std::size_t ground_size) : entries_(ground_size, 0) {}
  explicit SignVector(std::vector<std::int8_t> entries);

  /// Parses a string over {+,-,0}; throws std::invalid_argument otherwise.
  static SignVector parse(std::string_view text);

  std::size_t size() const { return entries_.size(); }
  int operator[](std::size_t e) const { return entries_[e]; }
  int at(std::size_t e) const { return entries_.at(e); }
  void set(std::size_t e, int sign);

  bool is_zero() const;
  /// No zero entries.
  bool is_full() const;
  std::vector<std::size_t> support() const;
  std::vector<std::size_t> zero_set() const;
  std::vector<std::size_t> positive_set() const;
  std::vector<std::size_t> negative_set() const;

  SignVector operator-() const;
  std::string to_string() const;

  const std::vector<std::int8_t>& entries() const { return entries_; }

  friend bool operator==(const SignVector&, const SignVector&) = default;
  /// Canonical order: lexicographic with 0 < - < + per entry.
  friend bool operator<(const SignVector& a, const SignVector& b);

 private:
  std::vector<std::int8_t> entries_;
};

/// (x∘y)_e = x_e if x_e != 0, else y_e.
SignVector compose(const SignVector& x, const SignVector& y);

/// Elements where x and y carry opposite nonzero signs.
std::vector<std::size_t> separator(const SignVector& x, const SignVector& y);

/// Product order with 0 ≤ -1, +1: every nonzero entry of x agrees with y.
bool face_leq(const SignVector& x, const SignVector& y);

/// Drops the listed elements (sorted, unique).
SignVector remove_elements(const SignVector& x, const std::vector<std::size_t>& removed);

}  // namespace tope
