#pragma once

#include <array>

#include "nsbox/box.hpp"

namespace nsbox {

/// Correlators <A_x B_y>, per-party marginals <A_x>, <B_y>, and covariances
/// cov(A_x,B_y) = <A_x B_y> - <A_x><B_y>, all exact. Correlator/covariance
/// arrays are indexed by 2x + y.
struct CorrelationSummary {
  std::array<Rational, 4> correlator{};
  std::array<Rational, 2> marginal_a{};
  std::array<Rational, 2> marginal_b{};
  std::array<Rational, 4> covariance{};
};

/// Throws SignalingError: marginals are ill-defined on signaling boxes.
CorrelationSummary correlation_summary(const Box& box);

namespace detail {
// Correlators without the nonsignaling check, for callers that checked already.
std::array<Rational, 4> correlators_unchecked(const Box& box);
}  // namespace detail

}  // namespace nsbox
