#pragma once

#include <optional>

#include "nsbox/box.hpp"
#include "nsbox/families.hpp"

namespace nsbox {

enum class IcVerdict { violated, satisfied, not_applicable };

/// Three-valued knowledge about a quantum model: known to exist, known not
/// to exist (postquantum), or not settled by the implemented criteria.
enum class QuantumModel { yes, no, unknown };

std::string ic_verdict_name(IcVerdict v);
std::string quantum_model_name(QuantumModel q);

/// Classification of a box, optionally sharpened by the closed-form criteria
/// of the family the box came from.
struct WitnessVerdict {
  bool bell_local = false;
  bool f_pr_positive = false;   // nonobjective-information certificate
  bool beyond_tsirelson = false;
  IcVerdict ic_verdict = IcVerdict::not_applicable;
  QuantumModel quantum_model_known = QuantumModel::unknown;
};

/// Throws SignalingError; throws ContextMismatchError when `family_context`
/// does not regenerate `box` exactly.
WitnessVerdict witness(const Box& box,
                       const std::optional<FamilyPoint>& family_context = std::nullopt);

}  // namespace nsbox
