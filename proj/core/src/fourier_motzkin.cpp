#include "tope/fourier_motzkin.hpp"

#include <algorithm>
#include <numeric>

namespace tope {

namespace {

using Relation = LinearConstraint::Relation;

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("Fourier-Motzkin coefficient overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("Fourier-Motzkin coefficient overflow");
  return r;
}

void normalise(LinearConstraint& c) {
  std::int64_t g = 0;
  for (auto a : c.coeffs) g = std::gcd(g, a);
  if (g > 1)
    for (auto& a : c.coeffs) a /= g;
}

bool all_zero(const LinearConstraint& c) {
  return std::all_of(c.coeffs.begin(), c.coeffs.end(), [](auto a) { return a == 0; });
}

// p*lhs + q*rhs with p, q > 0 (or any sign for equality substitution).
LinearConstraint combine(const LinearConstraint& lhs, std::int64_t p, const LinearConstraint& rhs, std::int64_t q,
                         Relation relation) {
  LinearConstraint out{std::vector<std::int64_t>(lhs.coeffs.size()), relation};
  for (std::size_t i = 0; i < out.coeffs.size(); ++i)
    out.coeffs[i] = checked_add(checked_mul(p, lhs.coeffs[i]), checked_mul(q, rhs.coeffs[i]));
  normalise(out);
  return out;
}

Relation weaker_of(Relation a, Relation b) {
  return (a == Relation::Positive || b == Relation::Positive) ? Relation::Positive : Relation::NonNegative;
}

}  // namespace

bool feasible(std::vector<LinearConstraint> constraints, std::size_t dimension) {
  for (auto& c : constraints) {
    if (c.coeffs.size() != dimension) throw std::invalid_argument("constraint dimension mismatch");
    normalise(c);
  }

  for (std::size_t var = 0; var < dimension; ++var) {
    // An equality with a nonzero coefficient on `var` eliminates it by substitution.
    auto pivot_it = std::find_if(constraints.begin(), constraints.end(), [&](const LinearConstraint& c) {
      return c.relation == Relation::Zero && c.coeffs[var] != 0;
    });
    std::vector<LinearConstraint> next;
    if (pivot_it != constraints.end()) {
      const LinearConstraint pivot = *pivot_it;
      std::int64_t a = pivot.coeffs[var];
      for (auto it = constraints.begin(); it != constraints.end(); ++it) {
        if (it == pivot_it) continue;
        std::int64_t b = it->coeffs[var];
        if (b == 0) {
          next.push_back(*it);
          continue;
        }
        // |a|*row - sign(a)*b*pivot keeps the row's direction and zeroes var.
        std::int64_t p = a > 0 ? a : -a;
        std::int64_t q = a > 0 ? -b : b;
        next.push_back(combine(*it, p, pivot, q, it->relation));
      }
    } else {
      std::vector<const LinearConstraint*> pos, neg;
      for (const auto& c : constraints) {
        if (c.coeffs[var] > 0)
          pos.push_back(&c);
        else if (c.coeffs[var] < 0)
          neg.push_back(&c);
        else
          next.push_back(c);
      }
      for (const auto* p : pos)
        for (const auto* n : neg)
          next.push_back(combine(*p, -n->coeffs[var], *n, p->coeffs[var], weaker_of(p->relation, n->relation)));
    }
    // Drop trivially satisfied rows and duplicates to keep the system small.
    std::erase_if(next, [](const LinearConstraint& c) { return all_zero(c) && c.relation != Relation::Positive; });
    for (const auto& c : next)
      if (all_zero(c) && c.relation == Relation::Positive) return false;
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) {
      return std::tie(x.coeffs, x.relation) < std::tie(y.coeffs, y.relation);
    });
    next.erase(std::unique(next.begin(), next.end(),
                           [](const auto& x, const auto& y) { return x.coeffs == y.coeffs && x.relation == y.relation; }),
               next.end());
    constraints = std::move(next);
  }
  // Only all-zero rows can remain; "0 > 0" was rejected above.
  return true;
}

}  // namespace tope
