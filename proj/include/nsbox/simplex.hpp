#pragma once

#include <vector>

#include "nsbox/rational.hpp"

namespace nsbox {

struct FeasibilityResult {
  bool feasible = false;
  std::vector<Rational> weights;  // one per column when feasible
};

/// Exact feasibility solver for A q = rhs, q >= 0.
///
/// Redundant equality rows are removed up front by exact Gaussian
/// elimination; the elimination recipe depends only on A, so one instance
/// serves many right-hand sides. The reduced system is then decided by a
/// phase-I simplex with Bland's pivot rule, every pivot in exact rationals.
class EqualitySystem {
public:
  explicit EqualitySystem(std::vector<std::vector<Rational>> coefficients);

  int columns() const { return cols_; }
  int reduced_rows() const { return rank_; }

  FeasibilityResult solve(std::vector<Rational> rhs) const;

private:
  // Elimination log entry, replayed on each right-hand side.
  struct Step {
    bool is_swap;
    int a, b;         // swap rows a and b, or row[a] -= factor * row[b]
    Rational factor;  // unused for swaps
  };

  int cols_ = 0;
  int rows_ = 0;
  int rank_ = 0;
  std::vector<std::vector<Rational>> reduced_;  // rank_ x cols_, row echelon
  std::vector<Step> steps_;
};

/// One-shot convenience wrapper.
FeasibilityResult solve_feasibility(std::vector<std::vector<Rational>> coefficients,
                                    std::vector<Rational> rhs);

}  // namespace nsbox
