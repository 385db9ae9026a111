#include "nsbox/decompose.hpp"

#include "nsbox/chsh.hpp"
#include "nsbox/errors.hpp"
#include "nsbox/membership.hpp"

namespace nsbox {

namespace {

struct Attempt {
  PrLabel label;
  Box residual;
  bool nonnegative;
  bool bell_local;
  bool fpr_zero;

  int score() const { return int(nonnegative) + int(bell_local) + int(fpr_zero); }
  bool all() const { return nonnegative && bell_local && fpr_zero; }
};

Attempt try_label(const Box& box, const Rational& p, PrLabel label) {
  Box vertex = pr_box(label);
  Rational rest = Rational(1) - p;
  Attempt a{label, Box{}, true, false, false};
  for (int c = 0; c < 16; ++c) {
    a.residual.cell(c) = (box.cell(c) - p * vertex.cell(c)) / rest;
    if (a.residual.cell(c).sign() < 0) a.nonnegative = false;
  }
  // The residual is nonsignaling by linearity even when entries dip below
  // zero, so both checks below are well-defined.
  a.bell_local = is_bell_local(a.residual).member;
  a.fpr_zero = f_pr(a.residual).f_pr.sign() == 0;
  return a;
}

}  // namespace

PrDecomposition pr_decompose(const Box& box) {
  if (!is_nonsignaling(box)) throw SignalingError("decomposition requires a nonsignaling box");
  Rational p = f_pr(box).f_pr;
  auto [argmax_label, max_value] = max_chsh(box);

  if (p == Rational(1)) {
    for (int i = 0; i < 8; ++i) {
      PrLabel l = PrLabel::from_index(i);
      if (pr_box(l) == box) {
        PrDecomposition d;
        d.p_pr = p;
        d.pr_label = l;
        d.residual_nonnegative = d.residual_bell_local = d.residual_fpr_zero = true;
        return d;
      }
    }
    throw DegenerateError("PR fraction is 1 but the box is not a PR box");
  }

  // CHSH-argmax candidate first, then the remaining labels in index order.
  std::vector<PrLabel> candidates;
  candidates.push_back(PrLabel{argmax_label.alpha, argmax_label.beta, argmax_label.gamma});
  for (int i = 0; i < 8; ++i) {
    PrLabel l = PrLabel::from_index(i);
    if (!(l == candidates.front())) candidates.push_back(l);
  }

  std::optional<Attempt> best;
  for (const PrLabel& l : candidates) {
    Attempt a = try_label(box, p, l);
    if (a.all()) {
      best = a;
      break;
    }
    if (!best || best->score() < a.score()) best = a;
  }

  PrDecomposition d;
  d.p_pr = p;
  d.pr_label = best->label;
  d.residual = best->residual;
  d.residual_nonnegative = best->nonnegative;
  d.residual_bell_local = best->bell_local;
  d.residual_fpr_zero = best->fpr_zero;
  return d;
}

}  // namespace nsbox
