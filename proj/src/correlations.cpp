#include "nsbox/correlations.hpp"

#include "nsbox/errors.hpp"

namespace nsbox {

namespace detail {

std::array<Rational, 4> correlators_unchecked(const Box& box) {
  std::array<Rational, 4> c{};
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      Rational v;
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          if ((a ^ b) == 0)
            v += box.at(x, y, a, b);
          else
            v -= box.at(x, y, a, b);
        }
      c[2 * x + y] = v;
    }
  return c;
}

}  // namespace detail

CorrelationSummary correlation_summary(const Box& box) {
  if (!is_nonsignaling(box))
    throw SignalingError("correlation summary requires a nonsignaling box");
  CorrelationSummary s;
  s.correlator = detail::correlators_unchecked(box);
  for (int x = 0; x < 2; ++x) {
    // P_A(a|x) read off at y = 0; nonsignaling makes the choice immaterial.
    s.marginal_a[x] = box.at(x, 0, 0, 0) + box.at(x, 0, 0, 1) - box.at(x, 0, 1, 0) -
                      box.at(x, 0, 1, 1);
  }
  for (int y = 0; y < 2; ++y) {
    s.marginal_b[y] = box.at(0, y, 0, 0) - box.at(0, y, 0, 1) + box.at(0, y, 1, 0) -
                      box.at(0, y, 1, 1);
  }
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      s.covariance[2 * x + y] = s.correlator[2 * x + y] - s.marginal_a[x] * s.marginal_b[y];
  return s;
}

}  // namespace nsbox
