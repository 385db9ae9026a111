#pragma once

#include <optional>

#include "nsbox/box.hpp"
#include "nsbox/fpr.hpp"

namespace nsbox {

/// Split of a nonsignaling box into p_pr * PR(label) + (1 - p_pr) * residual
/// with p_pr equal to the box's PR fraction. The three flags record explicit
/// checks on the residual; the decomposition is `validated` when all hold.
struct PrDecomposition {
  Rational p_pr;
  PrLabel pr_label;
  std::optional<Box> residual;  // absent only when p_pr = 1
  bool residual_nonnegative = false;
  bool residual_bell_local = false;
  bool residual_fpr_zero = false;

  bool validated() const {
    return !residual || (residual_nonnegative && residual_bell_local && residual_fpr_zero);
  }
};

/// Computes p_pr = f_pr(box), picks the PR vertex by CHSH argmax, and forms
/// the residual algebraically. If the argmax label fails validation all eight
/// PR labels are tried; the best attempt is returned with its failing flags.
/// Throws SignalingError; throws DegenerateError when p_pr = 1 but the box
/// is not a PR box.
PrDecomposition pr_decompose(const Box& box);

}  // namespace nsbox
