#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "nsbox/rational.hpp"

namespace nsbox {

/// Label of a deterministic box: outputs a = alpha*x XOR beta, b = gamma*y XOR epsilon.
struct DetLabel {
  std::uint8_t alpha = 0, beta = 0, gamma = 0, epsilon = 0;

  static DetLabel from_index(int i);  // 0..15, bits in (alpha,beta,gamma,epsilon) order
  int index() const { return alpha << 3 | beta << 2 | gamma << 1 | epsilon; }
  friend bool operator==(const DetLabel&, const DetLabel&) = default;
};

/// Label of a PR-box symmetry: a XOR b = x*y XOR alpha*x XOR beta*y XOR gamma.
struct PrLabel {
  std::uint8_t alpha = 0, beta = 0, gamma = 0;

  static PrLabel from_index(int i);  // 0..7
  int index() const { return alpha << 2 | beta << 1 | gamma; }
  friend bool operator==(const PrLabel&, const PrLabel&) = default;
};

/// A two-party, two-input, two-output box: the 16 conditional probabilities
/// P(ab|A_x B_y), stored in canonical (x, y, a, b) order. A valid box has
/// nonnegative entries summing to one within each input pair (x, y); entries
/// are not forced valid here so that intermediate algebra (e.g. decomposition
/// residuals before validation) can be represented.
class Box {
public:
  Box() = default;

  Rational& at(int x, int y, int a, int b) { return p_[idx(x, y, a, b)]; }
  const Rational& at(int x, int y, int a, int b) const { return p_[idx(x, y, a, b)]; }

  Rational& cell(int i) { return p_[i]; }
  const Rational& cell(int i) const { return p_[i]; }

  static constexpr int idx(int x, int y, int a, int b) { return x << 3 | y << 2 | a << 1 | b; }

  friend bool operator==(const Box&, const Box&) = default;

private:
  std::array<Rational, 16> p_{};  // zero-initialized
};

Box deterministic_box(DetLabel label);
Box pr_box(PrLabel label);
Box maximally_mixed_box();

/// Entry-wise convex combination. Throws WeightError unless all weights are
/// nonnegative and sum to exactly one.
Box mix(const std::vector<std::pair<Rational, Box>>& terms);

/// Nonnegative entries, each input pair summing to one.
bool is_valid_box(const Box& box);

/// Output marginals of each party independent of the other party's input,
/// checked by exact equality.
bool is_nonsignaling(const Box& box);

}  // namespace nsbox
