#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nsbox/box.hpp"
#include "nsbox/chsh.hpp"
#include "nsbox/simplex.hpp"

namespace nsbox {

/// An explicit, labeled vertex list defining a polytope by convex hull.
class VertexSet {
public:
  VertexSet(std::vector<Box> vertices, std::vector<std::string> labels);

  int size() const { return static_cast<int>(vertices_.size()); }
  const Box& vertex(int i) const { return vertices_[i]; }
  const std::string& label(int i) const { return labels_[i]; }
  const EqualitySystem& system() const { return *system_; }

private:
  std::vector<Box> vertices_;
  std::vector<std::string> labels_;
  std::shared_ptr<const EqualitySystem> system_;
};

/// The 16 deterministic boxes (Bell-local polytope vertices).
const VertexSet& local_vertices();
/// The 16 deterministic boxes plus the single PR box.
const VertexSet& genuine_vertices();
/// The 16 deterministic boxes plus all 8 PR boxes.
const VertexSet& nonsignaling_vertices();

struct ChshWitness {
  ChshLabel label;
  Rational value;
};

/// Hull membership verdict. Member certificates carry the nonzero vertex
/// weights and recompose to the queried box exactly; local-polytope
/// non-member verdicts carry the maximal CHSH witness.
struct LocalityCertificate {
  bool member = false;
  std::vector<std::pair<int, Rational>> weights;  // (vertex index, weight), nonzero only
  std::optional<ChshWitness> witness;
};

/// Exact feasibility test for box in conv(vset). Member certificates are
/// re-verified by recomposition before being returned.
LocalityCertificate hull_membership(const Box& box, const VertexSet& vset);

/// Membership in the Bell-local polytope; non-members carry the maximal CHSH
/// value as a witness. Throws SignalingError.
LocalityCertificate is_bell_local(const Box& box);

/// Membership in the hull of the PR box and the 16 deterministic boxes.
/// Throws SignalingError.
LocalityCertificate is_genuine_member(const Box& box);

}  // namespace nsbox
