#include "nsbox/sampler.hpp"

#include <algorithm>

#include "nsbox/errors.hpp"
#include "nsbox/membership.hpp"

namespace nsbox {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

Lcg64::Lcg64(std::uint64_t seed) : state_(splitmix64(seed)) {}

std::uint64_t Lcg64::next() {
  state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
  return state_;
}

std::uint64_t Lcg64::below(std::uint64_t n) {
  if (n == 0) throw Error("empty sampling range");
  return (next() >> 11) % n;
}

namespace {

// k nonnegative integers summing to total (sorted cut-point composition).
std::vector<long> integer_composition(Lcg64& rng, int k, long total) {
  std::vector<long> cuts(static_cast<std::size_t>(k) - 1);
  for (auto& c : cuts) c = static_cast<long>(rng.below(static_cast<std::uint64_t>(total) + 1));
  std::sort(cuts.begin(), cuts.end());
  std::vector<long> parts;
  parts.reserve(k);
  long prev = 0;
  for (long c : cuts) {
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(total - prev);
  return parts;
}

}  // namespace

std::vector<Rational> sample_simplex_weights(Lcg64& rng, int k, long denominator) {
  if (k < 1 || denominator < 1) throw Error("simplex sampler needs k >= 1, denominator >= 1");
  std::vector<Rational> w;
  w.reserve(k);
  for (long part : integer_composition(rng, k, denominator))
    w.emplace_back(part, static_cast<unsigned long>(denominator));
  return w;
}

Box sample_nonsignaling(std::uint64_t seed) {
  Lcg64 rng(seed);
  const VertexSet& vset = nonsignaling_vertices();
  // One in four samples concentrates at least half the weight on a single
  // vertex; flat compositions alone almost never leave the local polytope.
  std::vector<long> parts;
  if (rng.below(4) == 0) {
    int peak = static_cast<int>(rng.below(static_cast<std::uint64_t>(vset.size())));
    long heavy = 500 + static_cast<long>(rng.below(501));
    parts = integer_composition(rng, vset.size(), 1000 - heavy);
    parts[peak] += heavy;
  } else {
    parts = integer_composition(rng, vset.size(), 1000);
  }
  std::vector<std::pair<Rational, Box>> terms;
  terms.reserve(vset.size());
  for (int i = 0; i < vset.size(); ++i)
    terms.emplace_back(Rational(parts[i], 1000), vset.vertex(i));
  return mix(terms);
}

Box sample_product_box(Lcg64& rng, long denominator) {
  Rational pa[2], pb[2];  // probability of output 0 per input
  for (int x = 0; x < 2; ++x)
    pa[x] = Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(denominator) + 1)),
                     static_cast<unsigned long>(denominator));
  for (int y = 0; y < 2; ++y)
    pb[y] = Rational(static_cast<long>(rng.below(static_cast<std::uint64_t>(denominator) + 1)),
                     static_cast<unsigned long>(denominator));
  Box box;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          Rational fa = a == 0 ? pa[x] : Rational(1) - pa[x];
          Rational fb = b == 0 ? pb[y] : Rational(1) - pb[y];
          box.at(x, y, a, b) = fa * fb;
        }
  return box;
}

}  // namespace nsbox
