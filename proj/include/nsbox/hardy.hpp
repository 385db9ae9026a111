#pragma once

#include "nsbox/box.hpp"
#include "nsbox/relabel.hpp"

namespace nsbox {

/// Hardy-paradox check: the canonical conditions demand
/// P(01|A0B0) = P(10|A0B1) = P(10|A1B0) = 0, with success probability
/// p_h = P(10|A1B1). `variant` is the relabeling under which the conditions
/// hold (identity for the canonical form).
struct HardyReport {
  bool satisfies_conditions = false;
  Rational p_h;
  Relabeling variant;
};

/// With search_variants, scans all 128 relabelings in index order and reports
/// the first under which the canonical conditions hold; p_h is then read off
/// the relabeled box. Throws SignalingError.
HardyReport hardy_check(const Box& box, bool search_variants = false);

}  // namespace nsbox
