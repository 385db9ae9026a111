#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nsbox/chsh.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/families.hpp"
#include "nsbox/fpr.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/membership.hpp"
#include "nsbox/sampler.hpp"
#include "nsbox/witness.hpp"

using namespace nsbox;

TEST_CASE("decomposition of an isotropic box") {
  PrDecomposition d = pr_decompose(generate(IsotropicPoint{Rational(3, 4)}));
  CHECK(d.p_pr == Rational(3, 4));
  CHECK(d.pr_label == PrLabel{0, 0, 0});
  REQUIRE(d.residual.has_value());
  CHECK(*d.residual == maximally_mixed_box());
  CHECK(d.validated());
}

TEST_CASE("decomposition of a PR box") {
  PrDecomposition d = pr_decompose(pr_box(PrLabel{0, 0, 0}));
  CHECK(d.p_pr == Rational(1));
  CHECK(d.pr_label == PrLabel{0, 0, 0});
  CHECK_FALSE(d.residual.has_value());
  CHECK(d.validated());
}

TEST_CASE("decomposition of a two-PR mixture") {
  Box box = mix({{Rational(3, 5), pr_box(PrLabel{0, 0, 0})},
                 {Rational(2, 5), pr_box(PrLabel{1, 0, 0})}});
  PrDecomposition d = pr_decompose(box);
  CHECK(d.p_pr == Rational(1, 5));
  CHECK(d.pr_label == PrLabel{0, 0, 0});
  REQUIRE(d.residual.has_value());
  Box expected = mix({{Rational(1, 2), pr_box(PrLabel{0, 0, 0})},
                      {Rational(1, 2), pr_box(PrLabel{1, 0, 0})}});
  CHECK(*d.residual == expected);
  CHECK(d.validated());
}

TEST_CASE("decomposition requires nonsignaling") {
  Box box = deterministic_box(DetLabel{0, 0, 0, 0});
  box.at(0, 1, 0, 0) = Rational(1, 2);
  box.at(0, 1, 0, 1) = Rational(1, 2);
  CHECK_THROWS_AS(pr_decompose(box), SignalingError);
}

TEST_CASE("decomposition round-trip on sampled boxes") {
  // The split itself is always exact and the flags always match direct
  // re-checks; how often validation succeeds is an empirical question the
  // repro and acceptance layers report on.
  int validation_failures = 0;
  for (int s = 0; s < 300; ++s) {
    Box box = sample_nonsignaling(10000 + s);
    PrDecomposition d = pr_decompose(box);
    CHECK(d.p_pr == f_pr(box).f_pr);
    if (!d.residual) {
      CHECK(pr_box(d.pr_label) == box);
      continue;
    }
    Box recomposed = mix({{d.p_pr, pr_box(d.pr_label)}, {Rational(1) - d.p_pr, *d.residual}});
    CHECK(recomposed == box);
    CHECK(is_nonsignaling(*d.residual));
    bool nonneg = true;
    for (int c = 0; c < 16; ++c)
      if (d.residual->cell(c).sign() < 0) nonneg = false;
    CHECK(d.residual_nonnegative == nonneg);
    CHECK(d.residual_bell_local == is_bell_local(*d.residual).member);
    CHECK(d.residual_fpr_zero == (f_pr(*d.residual).f_pr.sign() == 0));
    if (!d.validated()) ++validation_failures;
  }
  MESSAGE("validation failures on 300 sampled boxes: ", validation_failures);
}

TEST_CASE("hardy check on reference boxes") {
  HardyReport pr = hardy_check(pr_box(PrLabel{0, 0, 0}));
  CHECK(pr.satisfies_conditions);
  CHECK(pr.p_h == Rational(1, 2));
  CHECK(pr.variant == Relabeling::identity());

  HardyReport family = hardy_check(generate(HardyPoint{
      Rational(1, 5),
      {Rational(4, 25), Rational(4, 25), Rational(4, 25), Rational(4, 25), Rational(4, 25)}}));
  CHECK(family.satisfies_conditions);
  CHECK(family.p_h == Rational(1, 10));

  HardyReport det = hardy_check(deterministic_box(DetLabel{0, 0, 0, 0}));
  CHECK(det.satisfies_conditions);
  CHECK(det.p_h == Rational(0));
}

TEST_CASE("hardy variant search") {
  Box pr001 = pr_box(PrLabel{0, 0, 1});
  CHECK_FALSE(hardy_check(pr001, false).satisfies_conditions);

  HardyReport found = hardy_check(pr001, true);
  CHECK(found.satisfies_conditions);
  CHECK(found.p_h == Rational(1, 2));
  CHECK_FALSE(found.variant == Relabeling::identity());
  CHECK(relabel(pr001, found.variant).at(0, 0, 0, 1) == Rational(0));
}

TEST_CASE("hardy success implies a CHSH violation") {
  Lcg64 rng(17);
  for (int s = 0; s < 200; ++s) {
    auto w = sample_simplex_weights(rng, 6);
    Box box = generate(HardyPoint{w[0], {w[1], w[2], w[3], w[4], w[5]}});
    HardyReport hr = hardy_check(box);
    REQUIRE(hr.satisfies_conditions);
    if (hr.p_h.sign() > 0) CHECK(Rational(2) < chsh_value(box, ChshLabel{0, 0, 0}));
  }
}

TEST_CASE("witness on family points") {
  {
    // eps^2 + nu^2 = 13/25 > 1/2 while staying inside the weight simplex
    NoisyPrPoint p{NoiseVertex::pr100, Rational(3, 5), Rational(2, 5)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK(v.ic_verdict == IcVerdict::violated);
    CHECK(v.quantum_model_known == QuantumModel::no);
    CHECK_FALSE(v.bell_local);
    CHECK(v.f_pr_positive);
    CHECK_FALSE(v.beyond_tsirelson);
  }
  {
    NoisyPrPoint p{NoiseVertex::pr111, Rational(3, 5), Rational(0)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK(v.ic_verdict == IcVerdict::satisfied);
    CHECK(v.quantum_model_known == QuantumModel::yes);
    CHECK_FALSE(v.bell_local);
  }
  {
    NoisyPrPoint p{NoiseVertex::d0000, Rational(7, 10), Rational(1, 5)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK(v.ic_verdict == IcVerdict::violated);
    CHECK(v.quantum_model_known == QuantumModel::no);
  }
  {
    // nonlocal, below Tsirelson, below the criterion: IC satisfied but no
    // quantum model indicated
    NoisyPrPoint p{NoiseVertex::d0000, Rational(11, 20), Rational(0)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK_FALSE(v.bell_local);
    CHECK_FALSE(v.beyond_tsirelson);
    CHECK(v.ic_verdict == IcVerdict::satisfied);
    CHECK(v.quantum_model_known == QuantumModel::unknown);
  }
  {
    WitnessVerdict v = witness(maximally_mixed_box());
    CHECK(v.bell_local);
    CHECK_FALSE(v.f_pr_positive);
    CHECK_FALSE(v.beyond_tsirelson);
    CHECK(v.ic_verdict == IcVerdict::not_applicable);
    CHECK(v.quantum_model_known == QuantumModel::yes);
  }
}

TEST_CASE("witness on noise family points") {
  {
    NoisePoint p{NoiseVertex::pr100, Rational(1, 3)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK(v.bell_local);
    CHECK(v.f_pr_positive);
    CHECK(v.ic_verdict == IcVerdict::not_applicable);
    CHECK(v.quantum_model_known == QuantumModel::yes);
  }
  {
    // nonlocal noise point: no criterion applies and no model is indicated
    NoisePoint p{NoiseVertex::pr111, Rational(3, 5)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK_FALSE(v.bell_local);
    CHECK_FALSE(v.beyond_tsirelson);
    CHECK(v.ic_verdict == IcVerdict::not_applicable);
    CHECK(v.quantum_model_known == QuantumModel::unknown);
  }
  {
    // beyond Tsirelson the generic override fires even without a criterion
    NoisePoint p{NoiseVertex::pr100, Rational(9, 10)};
    WitnessVerdict v = witness(generate(p), FamilyPoint{p});
    CHECK(v.beyond_tsirelson);
    CHECK(v.ic_verdict == IcVerdict::violated);
    CHECK(v.quantum_model_known == QuantumModel::no);
  }
}

TEST_CASE("witness context must regenerate the box") {
  Box box = generate(IsotropicPoint{Rational(1, 2)});
  CHECK_THROWS_AS(witness(box, FamilyPoint{IsotropicPoint{Rational(1, 4)}}),
                  ContextMismatchError);
}

TEST_CASE("witness on gnstpq points tracks locality") {
  GnstpqPoint local{Rational(0), {{DetLabel{0, 0, 0, 0}, Rational(1)}}};
  WitnessVerdict lv = witness(generate(local), FamilyPoint{local});
  CHECK(lv.bell_local);
  CHECK(lv.ic_verdict == IcVerdict::satisfied);
  CHECK(lv.quantum_model_known == QuantumModel::yes);

  GnstpqPoint nonlocal{Rational(1, 4), {{DetLabel{0, 0, 0, 0}, Rational(1)}}};
  WitnessVerdict nv = witness(generate(nonlocal), FamilyPoint{nonlocal});
  CHECK_FALSE(nv.bell_local);
  CHECK(nv.f_pr_positive);
  CHECK(nv.ic_verdict == IcVerdict::violated);
  CHECK(nv.quantum_model_known == QuantumModel::no);
}

TEST_CASE("witness invariants on sampled boxes") {
  for (int s = 0; s < 200; ++s) {
    Box box = sample_nonsignaling(11000 + s);
    WitnessVerdict v = witness(box);
    if (v.beyond_tsirelson) CHECK(v.ic_verdict != IcVerdict::satisfied);
    if (v.bell_local) CHECK_FALSE(v.beyond_tsirelson);
    CHECK(v.f_pr_positive == (f_pr(box).f_pr.sign() > 0));
  }
}

TEST_CASE("beyond tsirelson forces an IC violation") {
  IsotropicPoint p{Rational(9, 10)};
  WitnessVerdict v = witness(generate(p), FamilyPoint{p});
  CHECK(v.beyond_tsirelson);
  CHECK(v.ic_verdict == IcVerdict::violated);
  CHECK(v.quantum_model_known == QuantumModel::no);

  WitnessVerdict bare = witness(generate(p));
  CHECK(bare.beyond_tsirelson);
  CHECK(bare.ic_verdict == IcVerdict::violated);
}
