#include "nsbox/hardy.hpp"

#include "nsbox/errors.hpp"

namespace nsbox {

namespace {

bool canonical_conditions(const Box& box) {
  return box.at(0, 0, 0, 1).sign() == 0 && box.at(0, 1, 1, 0).sign() == 0 &&
         box.at(1, 0, 1, 0).sign() == 0;
}

}  // namespace

HardyReport hardy_check(const Box& box, bool search_variants) {
  if (!is_nonsignaling(box)) throw SignalingError("Hardy check requires a nonsignaling box");
  const int variants = search_variants ? 128 : 1;
  for (int i = 0; i < variants; ++i) {
    Relabeling r = Relabeling::from_index(i);
    Box candidate = i == 0 ? box : relabel(box, r);
    if (canonical_conditions(candidate))
      return HardyReport{true, candidate.at(1, 1, 1, 0), r};
  }
  return HardyReport{false, box.at(1, 1, 1, 0), Relabeling::identity()};
}

}  // namespace nsbox
