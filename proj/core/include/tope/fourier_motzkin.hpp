#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace tope {

/// Homogeneous linear constraint  a·x  (> | >= | =)  0  with integer coefficients.
struct LinearConstraint {
  enum class Relation { Positive, NonNegative, Zero };
  std::vector<std::int64_t> coeffs;
  Relation relation;
};

class ArithmeticOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Exact feasibility over the reals by Fourier–Motzkin elimination on integer
/// rows (gcd-normalised). Strictness propagates through every combination that
/// involves a strict row. Throws ArithmeticOverflow rather than losing exactness.
bool feasible(std::vector<LinearConstraint> constraints, std::size_t dimension);

}  // namespace tope
