#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nsbox/rational.hpp"

namespace nsbox {

struct ReproFailure {
  std::string params;
  std::string expected;
  std::string actual;
};

struct TheoremRow {
  std::string theory;
  long bell_local_cases = 0;
  long fpr_zero = 0;
  long fpr_positive = 0;
};

struct ReproReport {
  std::string suite;
  long run = 0;
  long passed = 0;
  std::optional<ReproFailure> failure;  // first failure, in parameter order
  std::vector<TheoremRow> table;        // classification suite only

  bool ok() const { return run == passed; }
};

/// Grid resolutions and sample counts; the defaults reproduce the full-size
/// suites, CLI flags scale them down for quick runs. Reports are
/// deterministic given seed and sizes.
struct ReproOptions {
  std::uint64_t seed = 1;
  Rational grid_step{1, 100};       // scalar parameter grids
  Rational pair_grid_step{1, 20};   // (eps, nu) pair grids
  Rational c1_grid_step{1, 10};     // nuisance weight of the two-vertex local part
  long local_parts_per_point = 20;
  long lemma2_samples = 1000;
  long theorem_samples = 1000;
  long fpr_box_samples = 10000;
  long fpr_product_samples = 1000;
  long fpr_relabel_boxes = 100;
};

ReproReport run_lemma1(const ReproOptions& opts = {});
ReproReport run_lemma2(const ReproOptions& opts = {});
ReproReport run_lemma3(const ReproOptions& opts = {});
ReproReport run_theorem_classification(const ReproOptions& opts = {});
ReproReport run_fpr_properties(const ReproOptions& opts = {});

/// Grid 0, step, 2*step, ..., with 1 appended when the step does not land on
/// it exactly.
std::vector<Rational> unit_grid(const Rational& step);

}  // namespace nsbox
