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

#include "effgames/piecewise.hpp"

#include <algorithm>
#include <stdexcept>

namespace effgames {

namespace {

Rational max_r(const Rational& a, const Rational& b) { return a < b ? b : a; }
Rational min_r(const Rational& a, const Rational& b) { return a < b ? a : b; }

}  // namespace

void StepFn::validate() const {
  if (breaks.size() < 2 || breaks.front() != Rational(0) ||
      breaks.back() != Rational(1)) {
    throw std::invalid_argument("stepfn: breaks must span [0,1]");
  }
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    if (!(breaks[i - 1] < breaks[i])) {
      throw std::invalid_argument("stepfn: breaks must increase");
    }
  }
  if (interval_values.size() + 1 != breaks.size() ||
      point_values.size() != breaks.size()) {
    throw std::invalid_argument("stepfn: value count mismatch");
  }
}

Rational StepFn::at(const Rational& p) const {
  if (p < Rational(0) || p > Rational(1)) {
    throw std::invalid_argument("stepfn: argument outside [0,1]");
  }
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (p == breaks[i]) return point_values[i];
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i] < p && p < breaks[i + 1]) return interval_values[i];
  }
  throw std::logic_error("stepfn: lookup failed");
}

StepFn StepFn::pointwise_min(const StepFn& f, const StepFn& g) {
  f.validate();
  g.validate();
  Vec merged = f.breaks;
  merged.insert(merged.end(), g.breaks.begin(), g.breaks.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  StepFn out;
  out.breaks = merged;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    out.point_values.push_back(min_r(f.at(merged[i]), g.at(merged[i])));
    if (i + 1 < merged.size()) {
      Rational mid = (merged[i] + merged[i + 1]) / Rational(2);
      out.interval_values.push_back(min_r(f.at(mid), g.at(mid)));
    }
  }
  return out;
}

StepFn StepFn::running_sup_left() const {
  validate();
  StepFn out;
  out.breaks = breaks;
  out.point_values.resize(breaks.size());
  out.interval_values.resize(interval_values.size());
  Rational run = point_values[0];
  out.point_values[0] = run;
  for (std::size_t i = 0; i < interval_values.size(); ++i) {
    run = max_r(run, interval_values[i]);
    out.interval_values[i] = run;
    run = max_r(run, point_values[i + 1]);
    out.point_values[i + 1] = run;
  }
  return out;
}

StepFn StepFn::running_sup_right() const {
  validate();
  StepFn out;
  out.breaks = breaks;
  out.point_values.resize(breaks.size());
  out.interval_values.resize(interval_values.size());
  std::size_t m = breaks.size() - 1;
  Rational run = point_values[m];
  out.point_values[m] = run;
  for (std::size_t i = interval_values.size(); i-- > 0;) {
    run = max_r(run, interval_values[i]);
    out.interval_values[i] = run;
    run = max_r(run, point_values[i]);
    out.point_values[i] = run;
  }
  return out;
}

bool StepFn::is_quasiconcave() const {
  // Quasiconcave iff equal to the min of its one-sided running sups.
  StepFn expect = pointwise_min(running_sup_left(), running_sup_right());
  return expect.interval_values == interval_values &&
         expect.point_values == point_values;
}

Rational PiecewiseLinear::at(const Rational& p) const {
  if (p < xs.front() || p > xs.back()) {
    throw std::invalid_argument("piecewise linear: argument out of range");
  }
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    if (p <= xs[i + 1]) {
      Rational t = (p - xs[i]) / (xs[i + 1] - xs[i]);
      return ys[i] + t * (ys[i + 1] - ys[i]);
    }
  }
  return ys.back();
}

bool PiecewiseLinear::is_concave() const {
  for (std::size_t i = 0; i + 2 < xs.size(); ++i) {
    Rational s1 = (ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]);
    Rational s2 = (ys[i + 2] - ys[i + 1]) / (xs[i + 2] - xs[i + 1]);
    if (s1 < s2) return false;
  }
  return true;
}

PiecewiseLinear upper_concave_envelope(
    const std::vector<std::pair<Rational, Rational>>& corners) {
  if (corners.empty()) {
    throw std::invalid_argument("envelope: no corner points");
  }
  std::vector<std::pair<Rational, Rational>> pts = corners;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
  });
  // Keep only the highest point at each abscissa.
  std::vector<std::pair<Rational, Rational>> dedup;
  for (const auto& pt : pts) {
    if (!dedup.empty() && dedup.back().first == pt.first) {
      dedup.back().second = pt.second;
    } else {
      dedup.push_back(pt);
    }
  }
  // Upper hull, monotone chain: keep right turns only.
  std::vector<std::pair<Rational, Rational>> hull;
  for (const auto& pt : dedup) {
    while (hull.size() >= 2) {
      const auto& o = hull[hull.size() - 2];
      const auto& a = hull[hull.size() - 1];
      Rational turn = (a.first - o.first) * (pt.second - o.second) -
                      (a.second - o.second) * (pt.first - o.first);
      if (turn >= Rational(0)) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  PiecewiseLinear out;
  for (const auto& [x, y] : hull) {
    out.xs.push_back(x);
    out.ys.push_back(y);
  }
  return out;
}

}  // namespace effgames
