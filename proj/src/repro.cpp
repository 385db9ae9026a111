#include "nsbox/repro.hpp"

#include "nsbox/chsh.hpp"
#include "nsbox/decompose.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/families.hpp"
#include "nsbox/fpr.hpp"
#include "nsbox/hardy.hpp"
#include "nsbox/membership.hpp"
#include "nsbox/relabel.hpp"
#include "nsbox/sampler.hpp"
#include "nsbox/witness.hpp"

namespace nsbox {

namespace {

constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ULL;

void check(ReproReport& rep, bool ok, const std::string& params, const std::string& expected,
           const std::string& actual) {
  ++rep.run;
  if (ok)
    ++rep.passed;
  else if (!rep.failure)
    rep.failure = ReproFailure{params, expected, actual};
}

std::string det_name(DetLabel l) {
  return std::string("D") + char('0' + l.alpha) + char('0' + l.beta) + char('0' + l.gamma) +
         char('0' + l.epsilon);
}

GnstpqPoint random_gnstpq_point(Lcg64& rng, const Rational& c0) {
  const auto& labels = chsh_plus_two_det_labels();
  int m = 1 + static_cast<int>(rng.below(4));
  std::vector<DetLabel> picked;
  for (int i = 0; i < m; ++i) picked.push_back(labels[rng.below(labels.size())]);
  auto weights = sample_simplex_weights(rng, m);
  GnstpqPoint point{c0, {}};
  for (int i = 0; i < m; ++i) point.local_part.emplace_back(picked[i], weights[i]);
  return point;
}

std::string local_part_string(const GnstpqPoint& p) {
  std::string s;
  for (const auto& [label, w] : p.local_part) {
    if (!s.empty()) s += "+";
    s += w.str() + "*" + det_name(label);
  }
  return s;
}

}  // namespace

std::vector<Rational> unit_grid(const Rational& step) {
  if (step.sign() <= 0 || Rational(1) < step) throw ParamError("grid step must lie in (0, 1]");
  std::vector<Rational> grid;
  Rational v;
  while (!(Rational(1) < v)) {
    grid.push_back(v);
    v += step;
  }
  if (grid.back() != Rational(1)) grid.push_back(Rational(1));
  return grid;
}

ReproReport run_lemma1(const ReproOptions& opts) {
  ReproReport rep;
  rep.suite = "lemma1";
  Lcg64 rng(opts.seed * kSeedStride + 1);
  const Rational two(2);

  for (const Rational& c0 : unit_grid(opts.grid_step)) {
    for (long t = 0; t < opts.local_parts_per_point; ++t) {
      GnstpqPoint point = random_gnstpq_point(rng, c0);
      Box box = generate(point);
      std::string params =
          "family=GNSTPQ c0=" + c0.str() + " local=" + local_part_string(point);

      Rational fp = f_pr(box).f_pr;
      check(rep, fp == c0, params, "f_pr = " + c0.str(), fp.str());

      Rational b = chsh_value(box, ChshLabel{0, 0, 0});
      Rational expected_b = two + two * c0;
      check(rep, b == expected_b, params, "B_000 = " + expected_b.str(), b.str());

      bool local = is_bell_local(box).member;
      check(rep, local == (c0.sign() == 0), params,
            std::string("bell_local = ") + (c0.sign() == 0 ? "true" : "false"),
            local ? "true" : "false");
    }
  }

  for (const Rational& c0 : unit_grid(opts.grid_step)) {
    for (const Rational& c1 : unit_grid(opts.c1_grid_step)) {
      Box box = generate(Gnstpq1Point{c0, c1});
      std::string params = "family=GNSTPQ1 c0=" + c0.str() + " c1=" + c1.str();

      Rational fp = f_pr(box).f_pr;
      check(rep, fp == c0, params, "f_pr = " + c0.str(), fp.str());

      Rational b = chsh_value(box, ChshLabel{0, 0, 0});
      Rational expected_b = two + two * c0;
      check(rep, b == expected_b, params, "B_000 = " + expected_b.str(), b.str());

      bool local = is_bell_local(box).member;
      check(rep, local == (c0.sign() == 0), params,
            std::string("bell_local = ") + (c0.sign() == 0 ? "true" : "false"),
            local ? "true" : "false");
    }
  }
  return rep;
}

ReproReport run_lemma2(const ReproOptions& opts) {
  ReproReport rep;
  rep.suite = "lemma2";
  Lcg64 rng(opts.seed * kSeedStride + 2);

  for (long i = 0; i < opts.lemma2_samples; ++i) {
    std::vector<Rational> w;
    if (i == 0) {
      w = {Rational(1), Rational(0), Rational(0), Rational(0), Rational(0), Rational(0)};
    } else if (i == 1) {
      w = {Rational(0), Rational(1, 5), Rational(1, 5), Rational(1, 5), Rational(1, 5),
           Rational(1, 5)};
    } else if (i == 2) {
      w = {Rational(1, 5), Rational(4, 25), Rational(4, 25), Rational(4, 25), Rational(4, 25),
           Rational(4, 25)};
    } else {
      w = sample_simplex_weights(rng, 6);
    }
    HardyPoint point{w[0], {w[1], w[2], w[3], w[4], w[5]}};
    Box box = generate(point);
    std::string params = "family=HARDY h_pr=" + w[0].str() + " h=" + w[1].str() + "," +
                         w[2].str() + "," + w[3].str() + "," + w[4].str() + "," + w[5].str();

    HardyReport hr = hardy_check(box, false);
    Rational expected_ph = point.h_pr / Rational(2);
    check(rep, hr.satisfies_conditions && hr.p_h == expected_ph, params,
          "hardy conditions with p_h = " + expected_ph.str(),
          (hr.satisfies_conditions ? "p_h = " + hr.p_h.str() : std::string("conditions fail")));

    Rational fp = f_pr(box).f_pr;
    check(rep, fp == point.h_pr, params, "f_pr = " + point.h_pr.str(), fp.str());

    bool local = is_bell_local(box).member;
    check(rep, local == (point.h_pr.sign() == 0), params,
          std::string("bell_local = ") + (point.h_pr.sign() == 0 ? "true" : "false"),
          local ? "true" : "false");

    bool flag = exceeds_hardy_quantum_bound(hr.p_h);
    Rational t = Rational(2) * hr.p_h + Rational(11);
    bool square_side = Rational(125) < t * t;
    check(rep, flag == square_side, params,
          std::string("hardy bound flag = ") + (square_side ? "true" : "false"),
          flag ? "true" : "false");
  }
  return rep;
}

ReproReport run_lemma3(const ReproOptions& opts) {
  ReproReport rep;
  rep.suite = "lemma3";
  const Rational half(1, 2);

  // Isotropic line: f_pr tracks the PR weight, locality flips at 1/2.
  for (const Rational& eps : unit_grid(opts.grid_step)) {
    Box box = generate(IsotropicPoint{eps});
    std::string params = "family=ISOTROPIC eps=" + eps.str();
    Rational fp = f_pr(box).f_pr;
    check(rep, fp == eps, params, "f_pr = " + eps.str(), fp.str());
    bool local = is_bell_local(box).member;
    bool expect_local = !(half < eps);
    check(rep, local == expect_local, params,
          std::string("bell_local = ") + (expect_local ? "true" : "false"),
          local ? "true" : "false");
  }

  // Pure noises: PR-symmetry noises keep their full PR fraction, the
  // deterministic noise has none.
  for (const Rational& nu : unit_grid(opts.grid_step)) {
    for (NoiseVertex q : {NoiseVertex::pr100, NoiseVertex::pr111, NoiseVertex::d0000}) {
      Box box = generate(NoisePoint{q, nu});
      Rational expected = q == NoiseVertex::d0000 ? Rational(0) : nu;
      Rational fp = f_pr(box).f_pr;
      check(rep, fp == expected, "family=NOISE q=" + noise_vertex_name(q) + " nu=" + nu.str(),
            "f_pr = " + expected.str(), fp.str());
    }
  }

  // Genuine-polytope membership of the two PR-noise families flips at
  // nu = 1/2.
  for (const Rational& eps : unit_grid(opts.pair_grid_step)) {
    for (const Rational& nu : unit_grid(opts.pair_grid_step)) {
      if (Rational(1) < eps + nu) continue;
      for (NoiseVertex q : {NoiseVertex::pr100, NoiseVertex::pr111}) {
        Box box = generate(NoisyPrPoint{q, eps, nu});
        bool member = is_genuine_member(box).member;
        bool expect_member = !(half < nu);
        check(rep, member == expect_member,
              "family=NOISY_PR q=" + noise_vertex_name(q) + " eps=" + eps.str() +
                  " nu=" + nu.str(),
              std::string("genuine = ") + (expect_member ? "true" : "false"),
              member ? "true" : "false");
      }
    }
  }

  // In the genuine regime of the second PR-noise family, the information
  // causality verdict coincides with Tsirelson's bound on B_000.
  for (const Rational& eps : unit_grid(opts.pair_grid_step)) {
    for (const Rational& nu : unit_grid(opts.pair_grid_step)) {
      if (half < nu || Rational(1) < eps + nu) continue;
      NoisyPrPoint point{NoiseVertex::pr111, eps, nu};
      Box box = generate(point);
      std::string params = "family=NOISY_PR q=pr111 eps=" + eps.str() + " nu=" + nu.str();
      WitnessVerdict wv = witness(box, FamilyPoint{point});
      bool over_tsirelson = exceeds_tsirelson(chsh_value(box, ChshLabel{0, 0, 0}));
      check(rep, (wv.ic_verdict == IcVerdict::violated) == over_tsirelson, params,
            std::string("ic violated iff B_000 > 2*sqrt(2), here ") +
                (over_tsirelson ? "true" : "false"),
            ic_verdict_name(wv.ic_verdict));
      bool squared = Rational(1) < Rational(2) * eps * eps;
      check(rep, over_tsirelson == squared, params,
            std::string("B_000 > 2*sqrt(2) iff 2*eps^2 > 1, here ") +
                (squared ? "true" : "false"),
            over_tsirelson ? "true" : "false");
    }
  }
  return rep;
}

ReproReport run_theorem_classification(const ReproOptions& opts) {
  ReproReport rep;
  rep.suite = "theorem";
  Lcg64 rng(opts.seed * kSeedStride + 3);

  TheoremRow gnstpq_row{"GNSTPQ", 0, 0, 0};
  for (long i = 0; i < opts.theorem_samples; ++i) {
    GnstpqPoint point = random_gnstpq_point(rng, Rational(0));
    Box box = generate(point);
    std::string params = "family=GNSTPQ c0=0 local=" + local_part_string(point);
    bool local = is_bell_local(box).member;
    Rational fp = f_pr(box).f_pr;
    ++gnstpq_row.bell_local_cases;
    if (fp.sign() == 0) ++gnstpq_row.fpr_zero;
    else ++gnstpq_row.fpr_positive;
    check(rep, local && fp.sign() == 0, params, "bell_local with f_pr = 0",
          (local ? "local, " : "nonlocal, ") + std::string("f_pr = ") + fp.str());
  }

  TheoremRow hardy_row{"HARDY", 0, 0, 0};
  Lcg64 hardy_rng(opts.seed * kSeedStride + 4);
  for (long i = 0; i < opts.theorem_samples; ++i) {
    auto w = sample_simplex_weights(hardy_rng, 5);
    HardyPoint point{Rational(0), {w[0], w[1], w[2], w[3], w[4]}};
    Box box = generate(point);
    std::string params = "family=HARDY h_pr=0 h=" + w[0].str() + "," + w[1].str() + "," +
                         w[2].str() + "," + w[3].str() + "," + w[4].str();
    bool local = is_bell_local(box).member;
    Rational fp = f_pr(box).f_pr;
    ++hardy_row.bell_local_cases;
    if (fp.sign() == 0) ++hardy_row.fpr_zero;
    else ++hardy_row.fpr_positive;
    check(rep, local && fp.sign() == 0, params, "bell_local with f_pr = 0",
          (local ? "local, " : "nonlocal, ") + std::string("f_pr = ") + fp.str());
  }

  // The genuine polytope, by contrast, has Bell-local boxes with a positive
  // PR fraction along the whole isotropic segment 0 < eps <= 1/2.
  TheoremRow genuine_row{"GENUINE_ISOTROPIC", 0, 0, 0};
  for (const Rational& eps : unit_grid(opts.grid_step)) {
    if (eps.sign() == 0 || Rational(1, 2) < eps) continue;
    Box box = generate(IsotropicPoint{eps});
    std::string params = "family=ISOTROPIC eps=" + eps.str();
    bool local = is_bell_local(box).member;
    Rational fp = f_pr(box).f_pr;
    ++genuine_row.bell_local_cases;
    if (fp.sign() == 0) ++genuine_row.fpr_zero;
    else ++genuine_row.fpr_positive;
    check(rep, local && fp == eps && fp.sign() > 0, params,
          "bell_local with f_pr = " + eps.str() + " > 0",
          (local ? "local, " : "nonlocal, ") + std::string("f_pr = ") + fp.str());
  }

  rep.table = {gnstpq_row, hardy_row, genuine_row};
  return rep;
}

ReproReport run_fpr_properties(const ReproOptions& opts) {
  ReproReport rep;
  rep.suite = "fpr-properties";
  const Rational one(1);

  // (i) range on sampled nonsignaling boxes
  std::uint64_t base = opts.seed * kSeedStride + 5;
  for (long i = 0; i < opts.fpr_box_samples; ++i) {
    Box box = sample_nonsignaling(base + static_cast<std::uint64_t>(i));
    Rational fp = f_pr(box).f_pr;
    check(rep, fp.sign() >= 0 && !(one < fp), "range sample " + std::to_string(i),
          "0 <= f_pr <= 1", fp.str());
  }

  // (ii) product boxes: all 256 deterministic strategy pairs, then random
  // rational marginals
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) {
      DetLabel a = DetLabel::from_index(i), b = DetLabel::from_index(j);
      Box box = deterministic_box(DetLabel{a.alpha, a.beta, b.gamma, b.epsilon});
      Rational fp = f_pr(box).f_pr;
      check(rep, fp.sign() == 0,
            "det strategy pair " + std::to_string(i) + "," + std::to_string(j), "f_pr = 0",
            fp.str());
    }
  Lcg64 product_rng(opts.seed * kSeedStride + 6);
  for (long i = 0; i < opts.fpr_product_samples; ++i) {
    Box box = sample_product_box(product_rng);
    Rational fp = f_pr(box).f_pr;
    check(rep, fp.sign() == 0, "product sample " + std::to_string(i), "f_pr = 0", fp.str());
  }

  // (iii) relabeling invariance
  std::uint64_t relabel_base = opts.seed * kSeedStride + 7;
  for (long k = 0; k < opts.fpr_relabel_boxes; ++k) {
    Box box = sample_nonsignaling(relabel_base + static_cast<std::uint64_t>(k));
    Rational fp = f_pr(box).f_pr;
    for (int r = 0; r < 128; ++r) {
      Rational relabeled = f_pr(relabel(box, Relabeling::from_index(r))).f_pr;
      check(rep, relabeled == fp,
            "relabel sample " + std::to_string(k) + " r=" + std::to_string(r),
            "f_pr = " + fp.str(), relabeled.str());
    }
  }

  // (iv) every PR box has full PR fraction
  for (int i = 0; i < 8; ++i) {
    Rational fp = f_pr(pr_box(PrLabel::from_index(i))).f_pr;
    check(rep, fp == one, "PR box " + std::to_string(i), "f_pr = 1", fp.str());
  }
  return rep;
}

}  // namespace nsbox
