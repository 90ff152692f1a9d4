#include "tope/sign_vector.hpp"

#include <algorithm>

namespace tope {

namespace {

void require_same_size(const SignVector& x, const SignVector& y) {
  if (x.size() != y.size()) throw std::invalid_argument("sign vectors differ in ground size");
}

// 0 < - < +
int canonical_rank(std::int8_t s) { return s == 0 ? 0 : (s < 0 ? 1 : 2); }

}  // namespace

SignVector::SignVector(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  for (auto s : entries_)
    if (s < -1 || s > 1) throw std::invalid_argument("sign out of range");
}

SignVector SignVector::parse(std::string_view text) {
  std::vector<std::int8_t> entries;
  entries.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '+': entries.push_back(1); break;
      case '-': entries.push_back(-1); break;
      case '0': entries.push_back(0); break;
      default: throw std::invalid_argument(std::string("illegal sign character '") + c + "'");
    }
  }
  return SignVector(std::move(entries));
}

void SignVector::set(std::size_t e, int sign) {
  if (sign < -1 || sign > 1) throw std::invalid_argument("sign out of range");
  entries_.at(e) = static_cast<std::int8_t>(sign);
}

bool SignVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](auto s) { return s == 0; });
}

bool SignVector::is_full() const {
  return std::none_of(entries_.begin(), entries_.end(), [](auto s) { return s == 0; });
}

namespace {
template <typename Pred>
std::vector<std::size_t> collect(const std::vector<std::int8_t>& v, Pred pred) {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < v.size(); ++e)
    if (pred(v[e])) out.push_back(e);
  return out;
}
}  // namespace

std::vector<std::size_t> SignVector::support() const { return collect(entries_, [](auto s) { return s != 0; }); }
std::vector<std::size_t> SignVector::zero_set() const { return collect(entries_, [](auto s) { return s == 0; }); }
std::vector<std::size_t> SignVector::positive_set() const { return collect(entries_, [](auto s) { return s > 0; }); }
std::vector<std::size_t> SignVector::negative_set() const { return collect(entries_, [](auto s) { return s < 0; }); }

SignVector SignVector::operator-() const {
  SignVector out = *this;
  for (auto& s : out.entries_) s = static_cast<std::int8_t>(-s);
  return out;
}

std::string SignVector::to_string() const {
  std::string out;
  out.reserve(entries_.size());
  for (auto s : entries_) out.push_back(s == 0 ? '0' : (s > 0 ? '+' : '-'));
  return out;
}

bool operator<(const SignVector& a, const SignVector& b) {
  return std::lexicographical_compare(a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
                                      [](auto p, auto q) { return canonical_rank(p) < canonical_rank(q); });
}

SignVector compose(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  SignVector out = x;
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e] == 0) out.set(e, y[e]);
  return out;
}

std::vector<std::size_t> separator(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e] * y[e] == -1) out.push_back(e);
  return out;
}

bool face_leq(const SignVector& x, const SignVector& y) {
  require_same_size(x, y);
  for (std::size_t e = 0; e < x.size(); ++e)
    if (x[e] != 0 && x[e] != y[e]) return false;
  return true;
}

SignVector remove_elements(const SignVector& x, const std::vector<std::size_t>& removed) {
  std::vector<std::int8_t> out;
  out.reserve(x.size());
  auto it = removed.begin();
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (it != removed.end() && *it == e) {
      ++it;
      continue;
    }
    out.push_back(static_cast<std::int8_t>(x[e]));
  }
  return SignVector(std::move(out));
}

}  // namespace tope
