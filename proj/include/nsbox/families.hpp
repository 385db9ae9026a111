#pragma once

#include <array>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "nsbox/box.hpp"

namespace nsbox {

/// Noise vertex Q of the noisy-PR families.
enum class NoiseVertex { pr100, pr111, d0000 };

std::string noise_vertex_name(NoiseVertex q);  // "pr100", "pr111", "d0000"

/// c0 * PR + (1 - c0) * local part, where the local part is a weighted
/// mixture of at most four deterministic boxes, each with CHSH value
/// B_000 = +2.
struct GnstpqPoint {
  Rational c0;
  std::vector<std::pair<DetLabel, Rational>> local_part;
};

/// c0 * PR + (1 - c0) * (c1 * D0000 + (1 - c1) * D0101).
struct Gnstpq1Point {
  Rational c0, c1;
};

/// h_pr * PR + h0 D0000 + h1 D0010 + h2 D0101 + h3 D1101 + h4 D1110; every
/// component meets the three Hardy zero conditions.
struct HardyPoint {
  Rational h_pr;
  std::array<Rational, 5> h;
};

/// eps * PR + nu * Q + (1 - eps - nu) * maximally mixed.
struct NoisyPrPoint {
  NoiseVertex q;
  Rational eps, nu;
};

/// eps * PR + (1 - eps) * maximally mixed.
struct IsotropicPoint {
  Rational eps;
};

/// nu * Q + (1 - nu) * maximally mixed.
struct NoisePoint {
  NoiseVertex q;
  Rational nu;
};

using FamilyPoint =
    std::variant<GnstpqPoint, Gnstpq1Point, HardyPoint, NoisyPrPoint, IsotropicPoint, NoisePoint>;

/// Wire identifier: GNSTPQ, GNSTPQ1, HARDY, NOISY_PR, ISOTROPIC, NOISE.
std::string family_id(const FamilyPoint& point);

/// The exact convex mixture the family point defines; always nonsignaling.
/// Throws ParamError when the point violates its family's invariants.
Box generate(const FamilyPoint& point);

/// The eight deterministic labels whose boxes have CHSH value B_000 = +2
/// (the admissible local-part labels of GnstpqPoint).
const std::vector<DetLabel>& chsh_plus_two_det_labels();

Box noise_vertex_box(NoiseVertex q);

}  // namespace nsbox
