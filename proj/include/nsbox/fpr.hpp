#pragma once

#include <array>

#include "nsbox/box.hpp"
#include "nsbox/correlations.hpp"

namespace nsbox {

/// The four absolute covariance CHSH values, the triad built from their
/// pairwise differences, and the PR-box fraction f_pr = min_i gamma_i / 4.
struct FprReport {
  std::array<Rational, 4> cov_chsh{};  // indexed 2*alpha + beta
  std::array<Rational, 3> gamma{};
  Rational f_pr;
};

/// Absolute covariance CHSH function covB_{2*alpha+beta}:
/// |cov(A0B0) + (-1)^beta cov(A0B1) + (-1)^alpha cov(A1B0)
///  + (-1)^(alpha^beta^1) cov(A1B1)|.
Rational cov_chsh(const CorrelationSummary& summary, int alpha, int beta);

/// PR-box fraction of a nonsignaling box. Throws SignalingError.
FprReport f_pr(const Box& box);

}  // namespace nsbox
