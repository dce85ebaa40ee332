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

#ifndef EFFGAMES_LP_HPP_
#define EFFGAMES_LP_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "effgames/rational.hpp"

namespace effgames::lp {

enum class RowSense { kLe, kEq, kGe };
enum class VarBound { kNonNegative, kFree };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

/// max c.x subject to per-row senses and per-variable lower bounds
/// (0 or unbounded). All data exact rationals.
struct LinearProgram {
  Vec objective;
  Mat rows;
  std::vector<RowSense> senses;
  Vec rhs;
  std::vector<VarBound> bounds;  // empty means all non-negative

  static LinearProgram maximize(Vec c) {
    LinearProgram lp;
    lp.objective = std::move(c);
    return lp;
  }
  void add_row(Vec coeffs, RowSense sense, Rational b);
  int num_vars() const { return static_cast<int>(objective.size()); }
  int num_rows() const { return static_cast<int>(rows.size()); }
  VarBound bound(int j) const {
    return bounds.empty() ? VarBound::kNonNegative : bounds[j];
  }
};

/// When status == kOptimal the primal and dual are both exactly feasible
/// and c.x == b.y (verified before returning).
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  Vec primal;
  Vec dual;  // one multiplier per row; >= 0 for <=-rows, <= 0 for >=-rows
  bool optimal() const { return status == LpStatus::kOptimal; }
};

/// Dense two-phase simplex with Bland's rule; exact over rationals.
LpSolution solve(const LinearProgram& lp);

/// Phase-1 only: a feasible point of the constraint system (zero objective).
LpSolution feasible_point(LinearProgram lp);

/// The hyperplane h.x = c through the given points (count must equal the
/// ambient dimension, points affinely independent), with the first nonzero
/// coefficient of h normalized to 1.
std::pair<Vec, Rational> affine_hyperplane_through(const Mat& points);

/// Exact Gaussian elimination; std::nullopt if the matrix is singular.
std::optional<Vec> solve_linear_system(Mat a, Vec b);

}  // namespace effgames::lp

#endif  // EFFGAMES_LP_HPP_
