#include "nsbox/membership.hpp"

#include <stdexcept>

#include "nsbox/errors.hpp"

namespace nsbox {

namespace {

std::vector<std::vector<Rational>> hull_system(const std::vector<Box>& vertices) {
  // 16 entry-match rows plus one normalization row.
  std::vector<std::vector<Rational>> a(17, std::vector<Rational>(vertices.size()));
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    for (int c = 0; c < 16; ++c) a[c][j] = vertices[j].cell(c);
    a[16][j] = 1;
  }
  return a;
}

std::string det_label_name(DetLabel l) {
  return std::string("D") + char('0' + l.alpha) + char('0' + l.beta) + char('0' + l.gamma) +
         char('0' + l.epsilon);
}

std::string pr_label_name(PrLabel l) {
  return std::string("PR") + char('0' + l.alpha) + char('0' + l.beta) + char('0' + l.gamma);
}

}  // namespace

VertexSet::VertexSet(std::vector<Box> vertices, std::vector<std::string> labels)
    : vertices_(std::move(vertices)), labels_(std::move(labels)) {
  if (vertices_.empty()) throw Error("vertex set must be nonempty");
  if (labels_.size() != vertices_.size()) throw Error("vertex/label count mismatch");
  for (const Box& v : vertices_)
    if (!is_valid_box(v)) throw Error("vertex set contains an invalid box");
  system_ = std::make_shared<const EqualitySystem>(hull_system(vertices_));
}

const VertexSet& local_vertices() {
  static const VertexSet set = [] {
    std::vector<Box> v;
    std::vector<std::string> names;
    for (int i = 0; i < 16; ++i) {
      DetLabel l = DetLabel::from_index(i);
      v.push_back(deterministic_box(l));
      names.push_back(det_label_name(l));
    }
    return VertexSet(std::move(v), std::move(names));
  }();
  return set;
}

const VertexSet& genuine_vertices() {
  static const VertexSet set = [] {
    std::vector<Box> v;
    std::vector<std::string> names;
    for (int i = 0; i < 16; ++i) {
      DetLabel l = DetLabel::from_index(i);
      v.push_back(deterministic_box(l));
      names.push_back(det_label_name(l));
    }
    v.push_back(pr_box(PrLabel{0, 0, 0}));
    names.push_back(pr_label_name(PrLabel{0, 0, 0}));
    return VertexSet(std::move(v), std::move(names));
  }();
  return set;
}

const VertexSet& nonsignaling_vertices() {
  static const VertexSet set = [] {
    std::vector<Box> v;
    std::vector<std::string> names;
    for (int i = 0; i < 16; ++i) {
      DetLabel l = DetLabel::from_index(i);
      v.push_back(deterministic_box(l));
      names.push_back(det_label_name(l));
    }
    for (int i = 0; i < 8; ++i) {
      PrLabel l = PrLabel::from_index(i);
      v.push_back(pr_box(l));
      names.push_back(pr_label_name(l));
    }
    return VertexSet(std::move(v), std::move(names));
  }();
  return set;
}

LocalityCertificate hull_membership(const Box& box, const VertexSet& vset) {
  std::vector<Rational> rhs(17);
  for (int c = 0; c < 16; ++c) rhs[c] = box.cell(c);
  rhs[16] = 1;

  FeasibilityResult lp = vset.system().solve(std::move(rhs));
  if (!lp.feasible) return {};

  LocalityCertificate cert;
  cert.member = true;
  Rational total;
  Box recomposed;
  for (int j = 0; j < vset.size(); ++j) {
    const Rational& w = lp.weights[j];
    if (w.sign() < 0) throw std::logic_error("negative weight in feasible certificate");
    if (w.sign() == 0) continue;
    cert.weights.emplace_back(j, w);
    total += w;
    for (int c = 0; c < 16; ++c) recomposed.cell(c) += w * vset.vertex(j).cell(c);
  }
  if (total != Rational(1) || !(recomposed == box))
    throw std::logic_error("certificate failed recomposition check");
  return cert;
}

LocalityCertificate is_bell_local(const Box& box) {
  if (!is_nonsignaling(box)) throw SignalingError("locality test requires a nonsignaling box");
  LocalityCertificate cert = hull_membership(box, local_vertices());
  if (!cert.member) {
    auto [label, value] = max_chsh(box);
    cert.witness = ChshWitness{label, value};
  }
  return cert;
}

LocalityCertificate is_genuine_member(const Box& box) {
  if (!is_nonsignaling(box))
    throw SignalingError("genuine-polytope test requires a nonsignaling box");
  return hull_membership(box, genuine_vertices());
}

}  // namespace nsbox
