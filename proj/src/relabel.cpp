#include "nsbox/relabel.hpp"

#include <map>
#include <stdexcept>

namespace nsbox {

namespace {

std::uint64_t encode(const std::array<std::uint8_t, 16>& m) {
  std::uint64_t key = 0;
  for (int i = 0; i < 16; ++i) key |= static_cast<std::uint64_t>(m[i]) << (4 * i);
  return key;
}

// The seven bits give 128 distinct cell permutations; invert that map once.
const std::map<std::uint64_t, int>& perm_to_index() {
  static const std::map<std::uint64_t, int> table = [] {
    std::map<std::uint64_t, int> t;
    for (int i = 0; i < 128; ++i) t.emplace(encode(Relabeling::from_index(i).cell_map()), i);
    return t;
  }();
  return table;
}

Relabeling lookup(const std::array<std::uint8_t, 16>& m) {
  const auto& table = perm_to_index();
  auto it = table.find(encode(m));
  if (it == table.end()) throw std::logic_error("cell permutation outside the relabeling group");
  return Relabeling::from_index(it->second);
}

}  // namespace

Relabeling Relabeling::from_index(int i) {
  Relabeling r;
  r.party_swap = i & 1;
  r.input_flip = {static_cast<std::uint8_t>(i >> 1 & 1), static_cast<std::uint8_t>(i >> 2 & 1)};
  r.output_flip = {{{static_cast<std::uint8_t>(i >> 3 & 1), static_cast<std::uint8_t>(i >> 4 & 1)},
                    {static_cast<std::uint8_t>(i >> 5 & 1), static_cast<std::uint8_t>(i >> 6 & 1)}}};
  return r;
}

int Relabeling::index() const {
  return party_swap | input_flip[0] << 1 | input_flip[1] << 2 | output_flip[0][0] << 3 |
         output_flip[0][1] << 4 | output_flip[1][0] << 5 | output_flip[1][1] << 6;
}

std::array<std::uint8_t, 16> Relabeling::cell_map() const {
  std::array<std::uint8_t, 16> m{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          int sx = x ^ input_flip[0], sy = y ^ input_flip[1];
          int sa = a ^ output_flip[0][x], sb = b ^ output_flip[1][y];
          int src = party_swap ? Box::idx(sy, sx, sb, sa) : Box::idx(sx, sy, sa, sb);
          m[Box::idx(x, y, a, b)] = static_cast<std::uint8_t>(src);
        }
  return m;
}

Relabeling Relabeling::compose(const Relabeling& first, const Relabeling& then) {
  auto mf = first.cell_map(), mt = then.cell_map();
  std::array<std::uint8_t, 16> m{};
  for (int i = 0; i < 16; ++i) m[i] = mf[mt[i]];
  return lookup(m);
}

Relabeling Relabeling::inverse() const {
  auto m = cell_map();
  std::array<std::uint8_t, 16> inv{};
  for (int i = 0; i < 16; ++i) inv[m[i]] = static_cast<std::uint8_t>(i);
  return lookup(inv);
}

Box relabel(const Box& box, const Relabeling& r) {
  auto m = r.cell_map();
  Box out;
  for (int i = 0; i < 16; ++i) out.cell(i) = box.cell(m[i]);
  return out;
}

}  // namespace nsbox
