#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nsbox/box.hpp"
#include "nsbox/correlations.hpp"

namespace nsbox {

/// One of the eight CHSH symmetries B_{alpha beta gamma}.
struct ChshLabel {
  std::uint8_t alpha = 0, beta = 0, gamma = 0;

  static ChshLabel from_index(int i);  // 0..7, lexicographic in (alpha,beta,gamma)
  int index() const { return alpha << 2 | beta << 1 | gamma; }
  friend bool operator==(const ChshLabel&, const ChshLabel&) = default;
};

/// B_{abc} = (-1)^c <A0B0> + (-1)^(b^c) <A0B1> + (-1)^(a^c) <A1B0>
///         + (-1)^(a^b^c^1) <A1B1>. Throws SignalingError.
Rational chsh_value(const Box& box, ChshLabel label);

/// Maximal CHSH value over the eight symmetries; ties break to the
/// lexicographically smallest label. Throws SignalingError.
std::pair<ChshLabel, Rational> max_chsh(const Box& box);

/// Exact comparison against 2*sqrt(2): true iff b > 0 and b^2 > 8.
bool exceeds_tsirelson(const Rational& b);

/// Exact comparison of a Hardy success probability against the quantum
/// maximum (5*sqrt(5) - 11)/2: true iff (2p + 11)^2 > 125. Throws RangeError
/// unless 0 <= p <= 1/2.
bool exceeds_hardy_quantum_bound(const Rational& p);

namespace detail {
Rational chsh_from_correlators(const std::array<Rational, 4>& c, ChshLabel label);
}  // namespace detail

}  // namespace nsbox
