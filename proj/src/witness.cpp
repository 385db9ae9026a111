#include "nsbox/witness.hpp"

#include "nsbox/chsh.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/fpr.hpp"
#include "nsbox/membership.hpp"

namespace nsbox {

std::string ic_verdict_name(IcVerdict v) {
  switch (v) {
    case IcVerdict::violated: return "violated";
    case IcVerdict::satisfied: return "satisfied";
    case IcVerdict::not_applicable: return "not-applicable";
  }
  return "not-applicable";
}

std::string quantum_model_name(QuantumModel q) {
  switch (q) {
    case QuantumModel::yes: return "true";
    case QuantumModel::no: return "false";
    case QuantumModel::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

struct FamilyCall {
  IcVerdict ic = IcVerdict::not_applicable;
  QuantumModel quantum = QuantumModel::unknown;
};

// Closed-form information-causality criteria, one per family that has one.
FamilyCall family_call(const FamilyPoint& point, bool bell_local) {
  FamilyCall out;
  std::visit(
      [&](const auto& p) {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GnstpqPoint> || std::is_same_v<T, Gnstpq1Point>) {
          // Every Bell-nonlocal point of these theories is postquantum.
          out.ic = bell_local ? IcVerdict::satisfied : IcVerdict::violated;
          out.quantum = bell_local ? QuantumModel::yes : QuantumModel::no;
        } else if constexpr (std::is_same_v<T, NoisyPrPoint>) {
          bool postquantum = false;
          switch (p.q) {
            case NoiseVertex::pr100:
              postquantum = Rational(1, 2) < p.eps * p.eps + p.nu * p.nu;
              break;
            case NoiseVertex::pr111:
              postquantum = Rational(1) < Rational(2) * p.eps * p.eps;
              break;
            case NoiseVertex::d0000: {
              Rational s = p.eps + p.nu;
              postquantum = Rational(1) < s * s + p.eps * p.eps;
              break;
            }
          }
          out.ic = postquantum ? IcVerdict::violated : IcVerdict::satisfied;
          if (postquantum)
            out.quantum = QuantumModel::no;
          else if (p.q == NoiseVertex::d0000)
            // Below the criterion the noisy-PR-plus-deterministic family has
            // no known quantum model unless the box is outright local.
            out.quantum = bell_local ? QuantumModel::yes : QuantumModel::unknown;
          else
            out.quantum = QuantumModel::yes;
        } else if constexpr (std::is_same_v<T, IsotropicPoint>) {
          bool postquantum = Rational(1) < Rational(2) * p.eps * p.eps;
          out.ic = postquantum ? IcVerdict::violated : IcVerdict::satisfied;
          out.quantum = postquantum ? QuantumModel::no : QuantumModel::yes;
        } else if constexpr (std::is_same_v<T, HardyPoint>) {
          // No closed-form IC criterion; the Hardy quantum maximum still
          // rules out a quantum model above it.
          if (bell_local)
            out.quantum = QuantumModel::yes;
          else if (exceeds_hardy_quantum_bound(p.h_pr / Rational(2)))
            out.quantum = QuantumModel::no;
        } else {
          static_assert(std::is_same_v<T, NoisePoint>);
          if (bell_local) out.quantum = QuantumModel::yes;
        }
      },
      point);
  return out;
}

}  // namespace

WitnessVerdict witness(const Box& box, const std::optional<FamilyPoint>& family_context) {
  if (!is_nonsignaling(box)) throw SignalingError("witness requires a nonsignaling box");
  if (family_context && !(generate(*family_context) == box))
    throw ContextMismatchError("family context does not regenerate the box");

  WitnessVerdict v;
  v.bell_local = is_bell_local(box).member;
  v.f_pr_positive = f_pr(box).f_pr.sign() > 0;
  v.beyond_tsirelson = exceeds_tsirelson(max_chsh(box).second);

  if (family_context) {
    FamilyCall call = family_call(*family_context, v.bell_local);
    v.ic_verdict = call.ic;
    v.quantum_model_known = call.quantum;
  } else {
    v.quantum_model_known = v.bell_local ? QuantumModel::yes : QuantumModel::unknown;
  }

  // A CHSH value beyond Tsirelson's bound violates information causality
  // outright, whatever the family said.
  if (v.beyond_tsirelson) {
    v.ic_verdict = IcVerdict::violated;
    v.quantum_model_known = QuantumModel::no;
  }
  return v;
}

}  // namespace nsbox
