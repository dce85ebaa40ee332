// Copyright 2026 The effgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "effgames/lp.hpp"

#include <stdexcept>

namespace effgames::lp {

namespace {

// Simplex tableau over the standardized system A'x' = b', x' >= 0 with
// b' >= 0. Free variables are split into positive and negative parts,
// inequality rows get a slack column and every row gets an artificial
// column so that the artificials form the initial basis.
struct Tableau {
  Mat t;                    // m rows, width cols + 1 (rhs last)
  Vec reduced;              // current reduced-cost row, width cols + 1
  std::vector<int> basis;   // basic column per row
  int cols = 0;
  int art_start = 0;        // first artificial column
  // structural column -> (original var, sign)
  std::vector<std::pair<int, int>> col_var;
  std::vector<bool> flipped;  // rows multiplied by -1 during standardization

  int rows() const { return static_cast<int>(t.size()); }

  void pivot(int r, int c) {
    Vec& prow = t[r];
    Rational inv = Rational(1) / prow[c];
    for (auto& x : prow) x *= inv;
    for (int i = 0; i < rows(); ++i) {
      if (i == r || t[i][c].is_zero()) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * prow[j];
    }
    if (!reduced[c].is_zero()) {
      Rational f = reduced[c];
      for (int j = 0; j <= cols; ++j) reduced[j] -= f * prow[j];
    }
    basis[r] = c;
  }

  // Reduced costs c_j - c_B B^{-1} A_j for the given objective.
  void load_objective(const Vec& obj) {
    reduced.assign(cols + 1, Rational(0));
    for (int j = 0; j <= cols; ++j) {
      Rational v = j < cols ? obj[j] : Rational(0);
      for (int i = 0; i < rows(); ++i) {
        if (!obj[basis[i]].is_zero() && !t[i][j].is_zero()) {
          v -= obj[basis[i]] * t[i][j];
        }
      }
      reduced[j] = v;
    }
  }

  // Bland's rule: enter at the lowest-index improving column, leave at the
  // minimum ratio breaking ties by lowest basic column. Returns false when
  // the objective is unbounded.
  bool iterate(int max_col) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < max_col; ++j) {
        if (reduced[j] > Rational(0)) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows(); ++i) {
        if (t[i][enter] > Rational(0)) {
          Rational ratio = t[i][cols] / t[i][enter];
          if (leave < 0 || ratio < best ||
              (ratio == best && basis[i] < basis[leave])) {
            leave = i;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  Rational objective_value(const Vec& obj) const {
    Rational v;
    for (int i = 0; i < rows(); ++i) {
      if (!obj[basis[i]].is_zero()) v += obj[basis[i]] * t[i][cols];
    }
    return v;
  }
};

void verify_certificates(const LinearProgram& lp, const LpSolution& s) {
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  for (int j = 0; j < n; ++j) {
    if (lp.bound(j) == VarBound::kNonNegative && s.primal[j] < Rational(0)) {
      throw std::logic_error("lp: primal bound violated");
    }
  }
  for (int i = 0; i < m; ++i) {
    Rational lhs = dot(lp.rows[i], s.primal);
    bool ok = lp.senses[i] == RowSense::kLe   ? lhs <= lp.rhs[i]
              : lp.senses[i] == RowSense::kGe ? lhs >= lp.rhs[i]
                                              : lhs == lp.rhs[i];
    if (!ok) throw std::logic_error("lp: primal row violated");
    if (lp.senses[i] == RowSense::kLe && s.dual[i] < Rational(0)) {
      throw std::logic_error("lp: dual sign violated");
    }
    if (lp.senses[i] == RowSense::kGe && s.dual[i] > Rational(0)) {
      throw std::logic_error("lp: dual sign violated");
    }
  }
  for (int j = 0; j < n; ++j) {
    Rational yaj;
    for (int i = 0; i < m; ++i) yaj += s.dual[i] * lp.rows[i][j];
    if (lp.bound(j) == VarBound::kFree) {
      if (yaj != lp.objective[j]) {
        throw std::logic_error("lp: dual equality violated");
      }
    } else if (yaj < lp.objective[j]) {
      throw std::logic_error("lp: dual row violated");
    }
  }
  if (dot(lp.objective, s.primal) != s.value ||
      dot(lp.rhs, s.dual) != s.value) {
    throw std::logic_error("lp: strong duality violated");
  }
}

}  // namespace

void LinearProgram::add_row(Vec coeffs, RowSense sense, Rational b) {
  if (static_cast<int>(coeffs.size()) != num_vars()) {
    throw std::invalid_argument("lp: row width mismatch");
  }
  rows.push_back(std::move(coeffs));
  senses.push_back(sense);
  rhs.push_back(std::move(b));
}

LpSolution solve(const LinearProgram& lp) {
  const int n = lp.num_vars();
  const int m = lp.num_rows();
  if (static_cast<int>(lp.senses.size()) != m ||
      static_cast<int>(lp.rhs.size()) != m ||
      (!lp.bounds.empty() && static_cast<int>(lp.bounds.size()) != n)) {
    throw std::invalid_argument("lp: inconsistent dimensions");
  }
  for (const auto& r : lp.rows) {
    if (static_cast<int>(r.size()) != n) {
      throw std::invalid_argument("lp: inconsistent row width");
    }
  }

  Tableau tab;
  for (int j = 0; j < n; ++j) {
    tab.col_var.emplace_back(j, 1);
    if (lp.bound(j) == VarBound::kFree) tab.col_var.emplace_back(j, -1);
  }
  const int nstruct = static_cast<int>(tab.col_var.size());
  int nslack = 0;
  for (int i = 0; i < m; ++i) {
    if (lp.senses[i] != RowSense::kEq) ++nslack;
  }
  tab.art_start = nstruct + nslack;
  tab.cols = tab.art_start + m;

  tab.t.assign(m, Vec(tab.cols + 1, Rational(0)));
  tab.flipped.assign(m, false);
  int slack = nstruct;
  for (int i = 0; i < m; ++i) {
    for (int c = 0; c < nstruct; ++c) {
      auto [j, sg] = tab.col_var[c];
      if (!lp.rows[i][j].is_zero()) {
        tab.t[i][c] = Rational(sg) * lp.rows[i][j];
      }
    }
    if (lp.senses[i] == RowSense::kLe) {
      tab.t[i][slack++] = Rational(1);
    } else if (lp.senses[i] == RowSense::kGe) {
      tab.t[i][slack++] = Rational(-1);
    }
    tab.t[i][tab.cols] = lp.rhs[i];
    if (tab.t[i][tab.cols] < Rational(0)) {
      for (auto& x : tab.t[i]) x = -x;
      tab.flipped[i] = true;
    }
    tab.t[i][tab.art_start + i] = Rational(1);
    tab.basis.push_back(tab.art_start + i);
  }

  // Phase 1: maximize -(sum of artificials).
  Vec phase1(tab.cols, Rational(0));
  for (int i = 0; i < m; ++i) phase1[tab.art_start + i] = Rational(-1);
  tab.load_objective(phase1);
  if (!tab.iterate(tab.cols)) {
    throw std::logic_error("lp: phase 1 unbounded");
  }
  LpSolution sol;
  if (tab.objective_value(phase1) != Rational(0)) {
    sol.status = LpStatus::kInfeasible;
    return sol;
  }
  // Drive leftover artificials out of the basis where possible; rows whose
  // non-artificial part is identically zero are redundant and stay put.
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < tab.art_start) continue;
    for (int c = 0; c < tab.art_start; ++c) {
      if (!tab.t[i][c].is_zero()) {
        tab.pivot(i, c);
        break;
      }
    }
  }

  // Phase 2 on the real objective, artificial columns barred.
  Vec phase2(tab.cols, Rational(0));
  for (int c = 0; c < nstruct; ++c) {
    auto [j, sg] = tab.col_var[c];
    phase2[c] = Rational(sg) * lp.objective[j];
  }
  tab.load_objective(phase2);
  if (!tab.iterate(tab.art_start)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.status = LpStatus::kOptimal;
  sol.primal.assign(n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (tab.basis[i] < nstruct) {
      auto [j, sg] = tab.col_var[tab.basis[i]];
      sol.primal[j] += Rational(sg) * tab.t[i][tab.cols];
    }
  }
  // The artificial columns carry B^{-1}, so y = c_B B^{-1} reads off them.
  sol.dual.assign(m, Rational(0));
  for (int i = 0; i < m; ++i) {
    Rational y;
    for (int r = 0; r < m; ++r) {
      if (!phase2[tab.basis[r]].is_zero()) {
        y += phase2[tab.basis[r]] * tab.t[r][tab.art_start + i];
      }
    }
    sol.dual[i] = tab.flipped[i] ? -y : y;
  }
  sol.value = tab.objective_value(phase2);
  verify_certificates(lp, sol);
  return sol;
}

LpSolution feasible_point(LinearProgram lp) {
  lp.objective.assign(lp.objective.size(), Rational(0));
  return solve(lp);
}

std::optional<Vec> solve_linear_system(Mat a, Vec b) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Vec{};
  for (auto& row : a) {
    if (static_cast<int>(row.size()) != n) {
      throw std::invalid_argument("solve_linear_system: not square");
    }
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r) {
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = Rational(1) / a[col][col];
    for (int j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      b[r] -= f * b[col];
    }
  }
  return b;
}

std::pair<Vec, Rational> affine_hyperplane_through(const Mat& points) {
  const int m = static_cast<int>(points.size());
  if (m == 0) throw std::invalid_argument("hyperplane: no points");
  const int dim = static_cast<int>(points[0].size());
  if (m != dim) {
    throw std::invalid_argument(
        "hyperplane: point count must equal the ambient dimension");
  }
  // Null space of the m x (dim+1) system [P | -1] (h, c); affinely
  // independent input leaves exactly one free column.
  Mat a(m, Vec(dim + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(points[i].size()) != dim) {
      throw std::invalid_argument("hyperplane: ragged points");
    }
    for (int j = 0; j < dim; ++j) a[i][j] = points[i][j];
    a[i][dim] = Rational(-1);
  }
  std::vector<int> pivot_col(m, -1);
  int rank = 0;
  for (int col = 0; col <= dim && rank < m; ++col) {
    int piv = -1;
    for (int r = rank; r < m; ++r) {
      if (!a[r][col].is_zero()) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[piv], a[rank]);
    Rational inv = Rational(1) / a[rank][col];
    for (int j = 0; j <= dim; ++j) a[rank][j] *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      Rational f = a[r][col];
      for (int j = 0; j <= dim; ++j) a[r][j] -= f * a[rank][j];
    }
    pivot_col[rank] = col;
    ++rank;
  }
  if (rank != m) {
    throw std::invalid_argument("hyperplane: affinely dependent points");
  }
  int free_col = 0;
  std::vector<bool> is_pivot(dim + 1, false);
  for (int r = 0; r < m; ++r) is_pivot[pivot_col[r]] = true;
  while (is_pivot[free_col]) ++free_col;
  Vec hc(dim + 1, Rational(0));
  hc[free_col] = Rational(1);
  for (int r = 0; r < m; ++r) {
    hc[pivot_col[r]] = -a[r][free_col];
  }
  Vec h(hc.begin(), hc.begin() + dim);
  Rational c = hc[dim];
  int first = -1;
  for (int j = 0; j < dim; ++j) {
    if (!h[j].is_zero()) {
      first = j;
      break;
    }
  }
  if (first < 0) {
    throw std::invalid_argument("hyperplane: degenerate normal");
  }
  Rational scale = Rational(1) / h[first];
  for (auto& x : h) x *= scale;
  c *= scale;
  return {h, c};
}

}  // namespace effgames::lp
