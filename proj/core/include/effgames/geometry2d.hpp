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

#ifndef EFFGAMES_GEOMETRY2D_HPP_
#define EFFGAMES_GEOMETRY2D_HPP_

#include <optional>
#include <string>
#include <vector>

#include "effgames/game.hpp"

namespace effgames::geometry2d {

struct Vec2 {
  Rational x;
  Rational y;
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

Rational cross(const Vec2& a, const Vec2& b);
Rational dot2(const Vec2& a, const Vec2& b);
Vec2 operator+(const Vec2& a, const Vec2& b);
Vec2 operator-(const Vec2& a, const Vec2& b);
Vec2 operator*(const Rational& s, const Vec2& v);

/// Scales a direction to primitive integer coordinates, preserving sign.
Vec2 canonical_direction(const Vec2& d);

/// Convex polygon in counterclockwise order with a minimal vertex set
/// (collinear interior vertices removed; start vertex lexicographically
/// least). Degenerates to a segment (2 vertices) or a point (1 vertex).
class Polygon {
 public:
  static Polygon hull(const std::vector<Vec2>& points);

  int size() const { return static_cast<int>(verts_.size()); }
  const std::vector<Vec2>& vertices() const { return verts_; }
  const Vec2& vertex(int i) const { return verts_[i]; }
  bool is_point() const { return size() == 1; }
  bool is_segment() const { return size() == 2; }

  bool contains(const Vec2& p) const;
  bool on_boundary(const Vec2& p) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Vec2> verts_;
};

/// The outer normal cone of a boundary face, described by its two boundary
/// directions. A wedge sweeps counterclockwise from lo to hi by less than
/// a half turn; a half-plane by exactly a half turn (hi == -lo); a ray has
/// hi == lo; a line is the degenerate normal set of a segment's interior;
/// full is the normal set of a single-point polygon.
struct NormalCone {
  enum class Kind { kRay, kWedge, kHalfPlane, kLine, kFull };
  Kind kind;
  Vec2 lo;
  Vec2 hi;

  bool contains(const Vec2& direction) const;
  bool meets_open_positive_quadrant() const;
  /// Intersection with the closed nonnegative quadrant; nullopt when the
  /// intersection is only the origin.
  std::optional<NormalCone> positive_part() const;
};

/// Intersection of two cones that both lie inside the closed nonnegative
/// quadrant. nullopt when the intersection is only the origin.
std::optional<NormalCone> intersect_in_quadrant(const NormalCone& a,
                                                const NormalCone& b);

/// A support set: either a vertex or an edge of the polygon.
struct Face {
  std::vector<Vec2> points;  // 1 or 2 vertices
  bool is_edge() const { return points.size() == 2; }
  friend bool operator==(const Face&, const Face&) = default;
};

/// Exact weighted Minkowski sum via merge of the CCW edge sequences.
Polygon minkowski_sum(const std::vector<std::pair<Rational, Polygon>>& terms);

/// S(P; n): the face of P maximizing n.x.
Face support_set(const Polygon& p, const Vec2& direction);

/// Outer normal cone at a boundary point: the wedge between the adjacent
/// edge normals at a vertex, or the single edge normal on an edge interior.
NormalCone normal_cone_at(const Polygon& p, const Vec2& point);

/// Per-state feasible payoff polygon of a two-player game.
Polygon state_payoff_polygon(const Game& game, int state);

/// Prior-weighted Minkowski sum of all state polygons.
Polygon ex_ante_payoff_polygon(const Game& game);

struct ConeAtPoint {
  bool on_boundary = false;
  std::optional<NormalCone> cone;           // raw outer normal cone
  std::optional<NormalCone> positive_cone;  // clipped to the quadrant
};

/// Everything needed to draw the two-player picture: hulls, the outcome's
/// per-state and ex-ante payoff points, and normal cones at those points.
struct FigureBundle {
  std::vector<Polygon> state_sets;
  Polygon ex_ante_set;
  std::vector<Vec2> state_points;
  Vec2 ex_ante_point;
  std::vector<ConeAtPoint> state_cones;
  ConeAtPoint ex_ante_cone;
  bool common_positive_normal = false;
};

FigureBundle figure_data(const Game& game, const Outcome& outcome);

}  // namespace effgames::geometry2d

#endif  // EFFGAMES_GEOMETRY2D_HPP_
