#include "nsbox/fpr.hpp"

namespace nsbox {

Rational cov_chsh(const CorrelationSummary& s, int alpha, int beta) {
  Rational v;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      int sign_bit = ((alpha & x) ^ (beta & y) ^ (x & y)) & 1;
      if (sign_bit == 0)
        v += s.covariance[2 * x + y];
      else
        v -= s.covariance[2 * x + y];
    }
  return v.abs();
}

FprReport f_pr(const Box& box) {
  CorrelationSummary s = correlation_summary(box);  // throws on signaling input
  FprReport r;
  for (int alpha = 0; alpha < 2; ++alpha)
    for (int beta = 0; beta < 2; ++beta) r.cov_chsh[2 * alpha + beta] = cov_chsh(s, alpha, beta);
  const auto& c = r.cov_chsh;
  r.gamma[0] = ((c[0] - c[1]).abs() - (c[2] - c[3]).abs()).abs();
  r.gamma[1] = ((c[0] - c[2]).abs() - (c[1] - c[3]).abs()).abs();
  r.gamma[2] = ((c[0] - c[3]).abs() - (c[1] - c[2]).abs()).abs();
  r.f_pr = min(r.gamma[0], min(r.gamma[1], r.gamma[2])) / Rational(4);
  return r;
}

}  // namespace nsbox
