#include "nsbox/families.hpp"

#include "nsbox/chsh.hpp"
#include "nsbox/errors.hpp"

namespace nsbox {

namespace {

void require_unit_interval(const Rational& v, const std::string& name) {
  if (v.sign() < 0 || Rational(1) < v)
    throw ParamError(name + " = " + v.str() + " outside [0, 1]");
}

const Box& pr000() {
  static const Box box = pr_box(PrLabel{0, 0, 0});
  return box;
}

}  // namespace

std::string noise_vertex_name(NoiseVertex q) {
  switch (q) {
    case NoiseVertex::pr100: return "pr100";
    case NoiseVertex::pr111: return "pr111";
    case NoiseVertex::d0000: return "d0000";
  }
  throw ParamError("unknown noise vertex");
}

Box noise_vertex_box(NoiseVertex q) {
  switch (q) {
    case NoiseVertex::pr100: return pr_box(PrLabel{1, 0, 0});
    case NoiseVertex::pr111: return pr_box(PrLabel{1, 1, 1});
    case NoiseVertex::d0000: return deterministic_box(DetLabel{0, 0, 0, 0});
  }
  throw ParamError("unknown noise vertex");
}

const std::vector<DetLabel>& chsh_plus_two_det_labels() {
  static const std::vector<DetLabel> labels = [] {
    std::vector<DetLabel> out;
    for (int i = 0; i < 16; ++i) {
      DetLabel l = DetLabel::from_index(i);
      if (chsh_value(deterministic_box(l), ChshLabel{0, 0, 0}) == Rational(2)) out.push_back(l);
    }
    return out;
  }();
  return labels;
}

std::string family_id(const FamilyPoint& point) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GnstpqPoint>) return "GNSTPQ";
        if constexpr (std::is_same_v<T, Gnstpq1Point>) return "GNSTPQ1";
        if constexpr (std::is_same_v<T, HardyPoint>) return "HARDY";
        if constexpr (std::is_same_v<T, NoisyPrPoint>) return "NOISY_PR";
        if constexpr (std::is_same_v<T, IsotropicPoint>) return "ISOTROPIC";
        if constexpr (std::is_same_v<T, NoisePoint>) return "NOISE";
      },
      point);
}

namespace {

Box generate_gnstpq(const GnstpqPoint& p) {
  require_unit_interval(p.c0, "c0");
  if (p.local_part.empty() || p.local_part.size() > 4)
    throw ParamError("local part must list between 1 and 4 deterministic labels");
  Rational local_total;
  for (const auto& [label, w] : p.local_part) {
    if (w.sign() < 0) throw ParamError("local-part weight " + w.str() + " is negative");
    local_total += w;
    bool admissible = false;
    for (const DetLabel& ok : chsh_plus_two_det_labels())
      if (ok == label) admissible = true;
    if (!admissible) {
      std::string name = std::string("D") + char('0' + label.alpha) + char('0' + label.beta) +
                         char('0' + label.gamma) + char('0' + label.epsilon);
      throw ParamError("local-part label " + name + " does not have CHSH value +2");
    }
  }
  if (local_total != Rational(1))
    throw ParamError("local-part weights sum to " + local_total.str() + ", expected 1");

  std::vector<std::pair<Rational, Box>> terms;
  terms.emplace_back(p.c0, pr000());
  Rational rest = Rational(1) - p.c0;
  for (const auto& [label, w] : p.local_part)
    terms.emplace_back(rest * w, deterministic_box(label));
  return mix(terms);
}

Box generate_gnstpq1(const Gnstpq1Point& p) {
  require_unit_interval(p.c0, "c0");
  require_unit_interval(p.c1, "c1");
  Rational rest = Rational(1) - p.c0;
  return mix({{p.c0, pr000()},
              {rest * p.c1, deterministic_box(DetLabel{0, 0, 0, 0})},
              {rest * (Rational(1) - p.c1), deterministic_box(DetLabel{0, 1, 0, 1})}});
}

Box generate_hardy(const HardyPoint& p) {
  require_unit_interval(p.h_pr, "h_pr");
  Rational total = p.h_pr;
  for (int i = 0; i < 5; ++i) {
    require_unit_interval(p.h[i], "h" + std::to_string(i));
    total += p.h[i];
  }
  if (total != Rational(1))
    throw ParamError("Hardy weights sum to " + total.str() + ", expected 1");
  static const std::array<DetLabel, 5> kHardyDets = {
      DetLabel{0, 0, 0, 0}, DetLabel{0, 0, 1, 0}, DetLabel{0, 1, 0, 1}, DetLabel{1, 1, 0, 1},
      DetLabel{1, 1, 1, 0}};
  std::vector<std::pair<Rational, Box>> terms;
  terms.emplace_back(p.h_pr, pr000());
  for (int i = 0; i < 5; ++i) terms.emplace_back(p.h[i], deterministic_box(kHardyDets[i]));
  return mix(terms);
}

Box generate_noisy_pr(const NoisyPrPoint& p) {
  require_unit_interval(p.eps, "eps");
  require_unit_interval(p.nu, "nu");
  if (Rational(1) < p.eps + p.nu)
    throw ParamError("eps + nu = " + (p.eps + p.nu).str() + " exceeds 1");
  return mix({{p.eps, pr000()},
              {p.nu, noise_vertex_box(p.q)},
              {Rational(1) - p.eps - p.nu, maximally_mixed_box()}});
}

Box generate_isotropic(const IsotropicPoint& p) {
  require_unit_interval(p.eps, "eps");
  return mix({{p.eps, pr000()}, {Rational(1) - p.eps, maximally_mixed_box()}});
}

Box generate_noise(const NoisePoint& p) {
  require_unit_interval(p.nu, "nu");
  return mix({{p.nu, noise_vertex_box(p.q)}, {Rational(1) - p.nu, maximally_mixed_box()}});
}

}  // namespace

Box generate(const FamilyPoint& point) {
  return std::visit(
      [](const auto& p) -> Box {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GnstpqPoint>) return generate_gnstpq(p);
        if constexpr (std::is_same_v<T, Gnstpq1Point>) return generate_gnstpq1(p);
        if constexpr (std::is_same_v<T, HardyPoint>) return generate_hardy(p);
        if constexpr (std::is_same_v<T, NoisyPrPoint>) return generate_noisy_pr(p);
        if constexpr (std::is_same_v<T, IsotropicPoint>) return generate_isotropic(p);
        if constexpr (std::is_same_v<T, NoisePoint>) return generate_noise(p);
      },
      point);
}

}  // namespace nsbox
