#pragma once

#include <array>
#include <cstdint>

#include "nsbox/box.hpp"

namespace nsbox {

/// A symmetry of the box scenario: optional party swap, per-party input flip,
/// and per-party per-input output flip. Seven bits, a group of order 128.
///
/// Acting on a box: P'(ab|xy) = P(a^oA[x], b^oB[y] | x^fA, y^fB), with the two
/// parties exchanged first when party_swap is set. Output flips are indexed by
/// the input label seen by the relabeled box.
struct Relabeling {
  std::uint8_t party_swap = 0;
  std::array<std::uint8_t, 2> input_flip{};              // [party], 0 = Alice
  std::array<std::array<std::uint8_t, 2>, 2> output_flip{};  // [party][input]

  static Relabeling identity() { return Relabeling{}; }
  static Relabeling from_index(int i);  // 0..127
  int index() const;

  /// Permutation of the 16 cells: relabel(box, r).cell(i) == box.cell(map[i]).
  std::array<std::uint8_t, 16> cell_map() const;

  /// compose(r1, r2) applies r1 first, then r2.
  static Relabeling compose(const Relabeling& first, const Relabeling& then);
  Relabeling inverse() const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

Box relabel(const Box& box, const Relabeling& r);

}  // namespace nsbox
