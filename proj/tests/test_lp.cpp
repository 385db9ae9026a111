#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsbox/chsh.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/families.hpp"
#include "nsbox/membership.hpp"
#include "nsbox/sampler.hpp"
#include "nsbox/simplex.hpp"

using namespace nsbox;

namespace {

Box recompose(const LocalityCertificate& cert, const VertexSet& vset) {
  Box out;
  for (const auto& [index, w] : cert.weights)
    for (int c = 0; c < 16; ++c) out.cell(c) += w * vset.vertex(index).cell(c);
  return out;
}

}  // namespace

TEST_CASE("raw feasibility solver") {
  // x + y = 1, x - y = 0  ->  x = y = 1/2
  auto r = solve_feasibility({{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}},
                             {Rational(1), Rational(0)});
  REQUIRE(r.feasible);
  CHECK(r.weights[0] == Rational(1, 2));
  CHECK(r.weights[1] == Rational(1, 2));

  // x + y = 1, x + y = 2 is inconsistent
  CHECK_FALSE(solve_feasibility({{Rational(1), Rational(1)}, {Rational(1), Rational(1)}},
                                {Rational(1), Rational(2)})
                  .feasible);

  // x - y = 1 with x, y >= 0 is feasible; -x = 1 is not
  CHECK(solve_feasibility({{Rational(1), Rational(-1)}}, {Rational(1)}).feasible);
  CHECK_FALSE(solve_feasibility({{Rational(-1)}}, {Rational(1)}).feasible);

  // redundant rows are tolerated
  auto red = solve_feasibility(
      {{Rational(1), Rational(1)}, {Rational(2), Rational(2)}, {Rational(1), Rational(-1)}},
      {Rational(1), Rational(2), Rational(0)});
  CHECK(red.feasible);
}

TEST_CASE("vertex membership with unit weight") {
  const VertexSet& local = local_vertices();
  Box vertex = deterministic_box(DetLabel{0, 1, 1, 0});
  LocalityCertificate cert = hull_membership(vertex, local);
  REQUIRE(cert.member);
  REQUIRE(cert.weights.size() == 1);
  CHECK(cert.weights[0].first == DetLabel{0, 1, 1, 0}.index());
  CHECK(cert.weights[0].second == Rational(1));

  LocalityCertificate pr_cert = hull_membership(pr_box(PrLabel{0, 0, 0}), genuine_vertices());
  REQUIRE(pr_cert.member);
  REQUIRE(pr_cert.weights.size() == 1);
  CHECK(pr_cert.weights[0].first == 16);
}

TEST_CASE("noise box is a deterministic average") {
  LocalityCertificate cert = hull_membership(maximally_mixed_box(), local_vertices());
  REQUIRE(cert.member);
  CHECK(recompose(cert, local_vertices()) == maximally_mixed_box());
}

TEST_CASE("PR box is outside the local polytope") {
  LocalityCertificate cert = is_bell_local(pr_box(PrLabel{0, 0, 0}));
  CHECK_FALSE(cert.member);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->label == ChshLabel{0, 0, 0});
  CHECK(cert.witness->value == Rational(4));
}

TEST_CASE("isotropic locality boundary") {
  CHECK(is_bell_local(generate(IsotropicPoint{Rational(1, 2)})).member);

  LocalityCertificate cert = is_bell_local(generate(IsotropicPoint{Rational(3, 5)}));
  CHECK_FALSE(cert.member);
  REQUIRE(cert.witness.has_value());
  CHECK(cert.witness->label == ChshLabel{0, 0, 0});
  CHECK(cert.witness->value == Rational(12, 5));

  Box local_gnstpq = generate(GnstpqPoint{Rational(0),
                                          {{DetLabel{0, 0, 0, 0}, Rational(1, 2)},
                                           {DetLabel{0, 1, 0, 1}, Rational(1, 2)}}});
  CHECK(is_bell_local(local_gnstpq).member);
}

TEST_CASE("genuine polytope membership") {
  CHECK(is_genuine_member(pr_box(PrLabel{0, 0, 0})).member);
  CHECK_FALSE(is_genuine_member(pr_box(PrLabel{1, 0, 0})).member);

  CHECK_FALSE(
      is_genuine_member(generate(NoisyPrPoint{NoiseVertex::pr100, Rational(3, 10), Rational(3, 5)}))
          .member);

  for (long e = 0; e <= 4; ++e)
    for (long n = 0; e + n <= 4; ++n) {
      Box box = generate(NoisyPrPoint{NoiseVertex::d0000, Rational(e, 4), Rational(n, 4)});
      CHECK(is_genuine_member(box).member);
    }
}

TEST_CASE("membership requires nonsignaling") {
  Box box = deterministic_box(DetLabel{0, 0, 0, 0});
  box.at(0, 1, 0, 0) = Rational(1, 2);
  box.at(0, 1, 0, 1) = Rational(1, 2);
  CHECK_THROWS_AS(is_bell_local(box), SignalingError);
  CHECK_THROWS_AS(is_genuine_member(box), SignalingError);
}

TEST_CASE("certificates recompose and witnesses exceed the local bound") {
  for (int s = 0; s < 400; ++s) {
    Box box = sample_nonsignaling(7000 + s);
    LocalityCertificate cert = is_bell_local(box);
    if (cert.member) {
      Rational total;
      for (const auto& [index, w] : cert.weights) {
        CHECK(w.sign() > 0);
        total += w;
      }
      CHECK(total == Rational(1));
      CHECK(recompose(cert, local_vertices()) == box);
    } else {
      REQUIRE(cert.witness.has_value());
      CHECK(Rational(2) < cert.witness->value);
    }
  }
}

TEST_CASE("LP locality coincides with the CHSH criterion") {
  for (int s = 0; s < 400; ++s) {
    Box box = sample_nonsignaling(8000 + s);
    bool lp_member = is_bell_local(box).member;
    bool chsh_member = !(Rational(2) < max_chsh(box).second);
    CHECK(lp_member == chsh_member);
  }
}

TEST_CASE("constructed local mixtures are always members") {
  Lcg64 rng(31);
  for (int t = 0; t < 150; ++t) {
    auto w = sample_simplex_weights(rng, 16);
    std::vector<std::pair<Rational, Box>> terms;
    for (int i = 0; i < 16; ++i) terms.emplace_back(w[i], local_vertices().vertex(i));
    Box box = mix(terms);
    LocalityCertificate cert = is_bell_local(box);
    REQUIRE(cert.member);
    CHECK(recompose(cert, local_vertices()) == box);
  }
}

TEST_CASE("membership is monotone across the nested polytopes") {
  for (int s = 0; s < 150; ++s) {
    Box box = sample_nonsignaling(9000 + s);
    bool local = is_bell_local(box).member;
    bool genuine = is_genuine_member(box).member;
    bool ns24 = hull_membership(box, nonsignaling_vertices()).member;
    if (local) CHECK(genuine);
    if (genuine) CHECK(ns24);
    CHECK(ns24);  // sampled boxes are mixtures of the 24 vertices
  }
}

TEST_CASE("sampler determinism and degenerate weights") {
  CHECK(sample_nonsignaling(42) == sample_nonsignaling(42));
  CHECK_FALSE(sample_nonsignaling(42) == sample_nonsignaling(43));

  // all weight on one PR vertex reproduces that PR box through mix()
  const VertexSet& vset = nonsignaling_vertices();
  std::vector<std::pair<Rational, Box>> terms;
  for (int i = 0; i < vset.size(); ++i)
    terms.emplace_back(i == 20 ? Rational(1) : Rational(0), vset.vertex(i));
  CHECK(mix(terms) == pr_box(PrLabel::from_index(4)));
}
