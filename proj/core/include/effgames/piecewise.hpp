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

#ifndef EFFGAMES_PIECEWISE_HPP_
#define EFFGAMES_PIECEWISE_HPP_

#include <vector>

#include "effgames/rational.hpp"

namespace effgames {

/// Piecewise-constant function on [0,1] with explicit values at the
/// breakpoints, so one-sided jumps are represented exactly.
struct StepFn {
  Vec breaks;           // 0 = b_0 < ... < b_m = 1
  Vec interval_values;  // value on each open interval (b_i, b_{i+1})
  Vec point_values;     // value at each breakpoint

  Rational at(const Rational& p) const;
  void validate() const;
  /// min(f, g) pointwise over the merged breakpoint grid.
  static StepFn pointwise_min(const StepFn& f, const StepFn& g);
  /// Running supremum from the left (non-decreasing) or right.
  StepFn running_sup_left() const;
  StepFn running_sup_right() const;
  /// Superlevel sets are intervals.
  bool is_quasiconcave() const;
};

/// Continuous piecewise-linear function on [0,1] given by its knots.
struct PiecewiseLinear {
  Vec xs;  // 0 = x_0 < ... < x_m = 1
  Vec ys;

  Rational at(const Rational& p) const;
  bool is_concave() const;
};

/// Upper concave envelope of an upper-semicontinuous piecewise function
/// described by corner points (x, y): the upper hull of the point cloud.
PiecewiseLinear upper_concave_envelope(const std::vector<std::pair<Rational, Rational>>& corners);

}  // namespace effgames

#endif  // EFFGAMES_PIECEWISE_HPP_
