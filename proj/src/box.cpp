#include "nsbox/box.hpp"

#include "nsbox/errors.hpp"

namespace nsbox {

DetLabel DetLabel::from_index(int i) {
  return DetLabel{static_cast<std::uint8_t>(i >> 3 & 1), static_cast<std::uint8_t>(i >> 2 & 1),
                  static_cast<std::uint8_t>(i >> 1 & 1), static_cast<std::uint8_t>(i & 1)};
}

PrLabel PrLabel::from_index(int i) {
  return PrLabel{static_cast<std::uint8_t>(i >> 2 & 1), static_cast<std::uint8_t>(i >> 1 & 1),
                 static_cast<std::uint8_t>(i & 1)};
}

Box deterministic_box(DetLabel label) {
  Box box;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int a = (label.alpha & x) ^ label.beta;
      int b = (label.gamma & y) ^ label.epsilon;
      box.at(x, y, a, b) = 1;
    }
  return box;
}

Box pr_box(PrLabel label) {
  Box box;
  const Rational half(1, 2);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int parity = (x & y) ^ (label.alpha & x) ^ (label.beta & y) ^ label.gamma;
      for (int a = 0; a < 2; ++a) box.at(x, y, a, a ^ parity) = half;
    }
  return box;
}

Box maximally_mixed_box() {
  Box box;
  const Rational quarter(1, 4);
  for (int i = 0; i < 16; ++i) box.cell(i) = quarter;
  return box;
}

Box mix(const std::vector<std::pair<Rational, Box>>& terms) {
  Rational total;
  for (const auto& [w, box] : terms) {
    if (w.sign() < 0) throw WeightError("mixture weight " + w.str() + " is negative");
    total += w;
  }
  if (total != Rational(1))
    throw WeightError("mixture weights sum to " + total.str() + ", expected 1");
  Box out;
  for (const auto& [w, box] : terms)
    for (int i = 0; i < 16; ++i) out.cell(i) += w * box.cell(i);
  return out;
}

bool is_valid_box(const Box& box) {
  for (int i = 0; i < 16; ++i)
    if (box.cell(i).sign() < 0) return false;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Rational sum;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) sum += box.at(x, y, a, b);
      if (sum != Rational(1)) return false;
    }
  return true;
}

bool is_nonsignaling(const Box& box) {
  for (int x = 0; x < 2; ++x)
    for (int a = 0; a < 2; ++a) {
      Rational m0 = box.at(x, 0, a, 0) + box.at(x, 0, a, 1);
      Rational m1 = box.at(x, 1, a, 0) + box.at(x, 1, a, 1);
      if (m0 != m1) return false;
    }
  for (int y = 0; y < 2; ++y)
    for (int b = 0; b < 2; ++b) {
      Rational m0 = box.at(0, y, 0, b) + box.at(0, y, 1, b);
      Rational m1 = box.at(1, y, 0, b) + box.at(1, y, 1, b);
      if (m0 != m1) return false;
    }
  return true;
}

}  // namespace nsbox
