#include "nsbox/chsh.hpp"

#include "nsbox/errors.hpp"

namespace nsbox {

ChshLabel ChshLabel::from_index(int i) {
  return ChshLabel{static_cast<std::uint8_t>(i >> 2 & 1), static_cast<std::uint8_t>(i >> 1 & 1),
                   static_cast<std::uint8_t>(i & 1)};
}

namespace detail {

Rational chsh_from_correlators(const std::array<Rational, 4>& c, ChshLabel l) {
  Rational v;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int sign_bit = ((l.alpha & x) ^ (l.beta & y) ^ l.gamma ^ (x & y)) & 1;
      if (sign_bit == 0)
        v += c[2 * x + y];
      else
        v -= c[2 * x + y];
    }
  return v;
}

}  // namespace detail

Rational chsh_value(const Box& box, ChshLabel label) {
  if (!is_nonsignaling(box)) throw SignalingError("CHSH value requires a nonsignaling box");
  return detail::chsh_from_correlators(detail::correlators_unchecked(box), label);
}

std::pair<ChshLabel, Rational> max_chsh(const Box& box) {
  if (!is_nonsignaling(box)) throw SignalingError("CHSH value requires a nonsignaling box");
  auto c = detail::correlators_unchecked(box);
  ChshLabel best = ChshLabel::from_index(0);
  Rational best_value = detail::chsh_from_correlators(c, best);
  for (int i = 1; i < 8; ++i) {
    ChshLabel l = ChshLabel::from_index(i);
    Rational v = detail::chsh_from_correlators(c, l);
    if (best_value < v) {
      best = l;
      best_value = v;
    }
  }
  return {best, best_value};
}

bool exceeds_tsirelson(const Rational& b) {
  return b.sign() > 0 && Rational(8) < b * b;
}

bool exceeds_hardy_quantum_bound(const Rational& p) {
  if (p.sign() < 0 || Rational(1, 2) < p)
    throw RangeError("Hardy probability " + p.str() + " outside [0, 1/2]");
  Rational t = Rational(2) * p + Rational(11);
  return Rational(125) < t * t;
}

}  // namespace nsbox
