#include "nsbox/simplex.hpp"

#include <stdexcept>
#include <utility>

#include "nsbox/errors.hpp"

namespace nsbox {

EqualitySystem::EqualitySystem(std::vector<std::vector<Rational>> a) {
  rows_ = static_cast<int>(a.size());
  if (rows_ == 0) throw Error("equality system needs at least one row");
  cols_ = static_cast<int>(a[0].size());
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != cols_) throw Error("ragged equality system");

  int r = 0;
  for (int col = 0; col < cols_ && r < rows_; ++col) {
    int pivot = -1;
    for (int i = r; i < rows_; ++i)
      if (a[i][col].sign() != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(a[pivot], a[r]);
      steps_.push_back({true, pivot, r, Rational(0)});
    }
    for (int i = r + 1; i < rows_; ++i) {
      if (a[i][col].sign() == 0) continue;
      Rational f = a[i][col] / a[r][col];
      for (int j = col; j < cols_; ++j) a[i][j] -= f * a[r][j];
      steps_.push_back({false, i, r, f});
    }
    ++r;
  }
  rank_ = r;
  reduced_.assign(a.begin(), a.begin() + rank_);
}

FeasibilityResult EqualitySystem::solve(std::vector<Rational> rhs) const {
  if (static_cast<int>(rhs.size()) != rows_) throw Error("right-hand side size mismatch");

  for (const Step& s : steps_) {
    if (s.is_swap)
      std::swap(rhs[s.a], rhs[s.b]);
    else
      rhs[s.a] -= s.factor * rhs[s.b];
  }
  // Rows eliminated to zero must have zero right-hand side.
  for (int i = rank_; i < rows_; ++i)
    if (rhs[i].sign() != 0) return {};

  // Phase-I tableau: artificial basis, minimize the artificials' sum.
  const int n = cols_;
  const int m = rank_;
  std::vector<std::vector<Rational>> t(reduced_);
  std::vector<Rational> b(rhs.begin(), rhs.begin() + m);
  for (int i = 0; i < m; ++i) {
    if (b[i].sign() < 0) {
      b[i] = -b[i];
      for (auto& v : t[i]) v = -v;
    }
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;  // artificial
  std::vector<Rational> cost(n);
  Rational objective;
  for (int i = 0; i < m; ++i) {
    objective += b[i];
    for (int j = 0; j < n; ++j) cost[j] -= t[i][j];
  }

  while (true) {
    int entering = -1;  // Bland: lowest-index negative reduced cost
    for (int j = 0; j < n; ++j)
      if (cost[j].sign() < 0) {
        entering = j;
        break;
      }
    if (entering < 0) break;

    int leaving = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][entering].sign() <= 0) continue;
      Rational ratio = b[i] / t[i][entering];
      if (leaving < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leaving])) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0)
      throw std::logic_error("phase-I objective unbounded; inconsistent tableau");

    Rational piv = t[leaving][entering];
    for (auto& v : t[leaving]) v /= piv;
    b[leaving] /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == leaving || t[i][entering].sign() == 0) continue;
      Rational f = t[i][entering];
      for (int j = 0; j < n; ++j) t[i][j] -= f * t[leaving][j];
      b[i] -= f * b[leaving];
    }
    Rational cf = cost[entering];
    objective += cf * b[leaving];
    for (int j = 0; j < n; ++j) cost[j] -= cf * t[leaving][j];
    basis[leaving] = entering;
  }

  if (objective.sign() != 0) return {};
  FeasibilityResult out;
  out.feasible = true;
  out.weights.assign(n, Rational(0));
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) out.weights[basis[i]] = b[i];
  return out;
}

FeasibilityResult solve_feasibility(std::vector<std::vector<Rational>> coefficients,
                                    std::vector<Rational> rhs) {
  return EqualitySystem(std::move(coefficients)).solve(std::move(rhs));
}

}  // namespace nsbox
