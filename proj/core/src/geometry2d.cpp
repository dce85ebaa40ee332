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

#include "effgames/geometry2d.hpp"

#include <algorithm>
#include <stdexcept>

namespace effgames::geometry2d {

namespace {

bool lex_less(const Vec2& a, const Vec2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

bool below_less(const Vec2& a, const Vec2& b) {
  return a.y < b.y || (a.y == b.y && a.x < b.x);
}

bool parallel_pos(const Vec2& u, const Vec2& v) {
  return cross(u, v).is_zero() && dot2(u, v) > Rational(0);
}

bool in_closed_quadrant(const Vec2& d) {
  return d.x >= Rational(0) && d.y >= Rational(0);
}

bool strictly_positive(const Vec2& d) {
  return d.x > Rational(0) && d.y > Rational(0);
}

bool point_on_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
  if (!cross(b - a, p - a).is_zero()) return false;
  Rational t = dot2(p - a, b - a);
  return t >= Rational(0) && t <= dot2(b - a, b - a);
}

// Edges of a CCW polygon listed from its lowest vertex come out sorted by
// polar angle over [0, 2pi); a segment contributes its two directions, a
// point none.
int angle_half(const Vec2& d) {
  if (d.y > Rational(0) || (d.y.is_zero() && d.x > Rational(0))) return 0;
  return 1;
}

bool angle_less(const Vec2& a, const Vec2& b) {
  int ha = angle_half(a), hb = angle_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > Rational(0);
}

Polygon scale(const Polygon& p, const Rational& w) {
  std::vector<Vec2> pts;
  for (const auto& v : p.vertices()) pts.push_back(w * v);
  return Polygon::hull(pts);
}

Polygon pairwise_sum(const Polygon& p, const Polygon& q) {
  // Rotate both vertex lists to start at the lowest vertex, then merge the
  // two angle-sorted edge fans.
  auto rotate_to_lowest = [](const Polygon& poly) {
    auto verts = poly.vertices();
    auto lowest = std::min_element(verts.begin(), verts.end(), below_less);
    std::rotate(verts.begin(), lowest, verts.end());
    return verts;
  };
  std::vector<Vec2> pv = rotate_to_lowest(p);
  std::vector<Vec2> qv = rotate_to_lowest(q);
  auto edges_of = [](const std::vector<Vec2>& v) {
    std::vector<Vec2> edges;
    if (v.size() == 2) {
      edges.push_back(v[1] - v[0]);
      edges.push_back(v[0] - v[1]);
    } else if (v.size() > 2) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        edges.push_back(v[(i + 1) % v.size()] - v[i]);
      }
    }
    return edges;
  };
  std::vector<Vec2> pe = edges_of(pv);
  std::vector<Vec2> qe = edges_of(qv);

  Vec2 current = pv[0] + qv[0];
  std::vector<Vec2> out{current};
  std::size_t i = 0, j = 0;
  while (i < pe.size() || j < qe.size()) {
    Vec2 step;
    if (j == qe.size() || (i < pe.size() && !angle_less(qe[j], pe[i]))) {
      step = pe[i++];
    } else {
      step = qe[j++];
    }
    current = current + step;
    out.push_back(current);
  }
  return Polygon::hull(out);
}

Vec2 rot_cw(const Vec2& d) { return Vec2{d.y, -d.x}; }

NormalCone make_ray(const Vec2& d) {
  Vec2 c = canonical_direction(d);
  return NormalCone{NormalCone::Kind::kRay, c, c};
}

}  // namespace

Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Rational dot2(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 operator*(const Rational& s, const Vec2& v) {
  return {s * v.x, s * v.y};
}

Vec2 canonical_direction(const Vec2& d) {
  if (d.x.is_zero() && d.y.is_zero()) {
    throw std::invalid_argument("canonical_direction: zero vector");
  }
  BigInt qx = d.x.denominator(), qy = d.y.denominator();
  BigInt nx = d.x.numerator() * qy;
  BigInt ny = d.y.numerator() * qx;
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(nx),
                                        boost::multiprecision::abs(ny));
  return Vec2{Rational(BigInt(nx / g)), Rational(BigInt(ny / g))};
}

Polygon Polygon::hull(const std::vector<Vec2>& points) {
  if (points.empty()) throw std::invalid_argument("hull: empty input");
  std::vector<Vec2> pts = points;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polygon poly;
  if (pts.size() == 1) {
    poly.verts_ = pts;
    return poly;
  }
  bool collinear = true;
  for (std::size_t i = 2; i < pts.size() && collinear; ++i) {
    collinear = cross(pts[1] - pts[0], pts[i] - pts[0]).is_zero();
  }
  if (collinear) {
    poly.verts_ = {pts.front(), pts.back()};
    return poly;
  }
  auto build = [&pts](std::vector<Vec2>& chain, bool lower) {
    auto turn_ok = [lower](const Vec2& o, const Vec2& a, const Vec2& b) {
      Rational c = cross(a - o, b - o);
      return lower ? c > Rational(0) : c < Rational(0);
    };
    for (std::size_t idx = 0; idx < pts.size(); ++idx) {
      const Vec2& pt = lower ? pts[idx] : pts[pts.size() - 1 - idx];
      while (chain.size() >= 2 &&
             !turn_ok(chain[chain.size() - 2], chain.back(), pt)) {
        chain.pop_back();
      }
      chain.push_back(pt);
    }
  };
  std::vector<Vec2> lower, upper;
  build(lower, true);
  std::vector<Vec2> rev(pts.rbegin(), pts.rend());
  {
    auto turn_ok = [](const Vec2& o, const Vec2& a, const Vec2& b) {
      return cross(a - o, b - o) > Rational(0);
    };
    for (const Vec2& pt : rev) {
      while (upper.size() >= 2 &&
             !turn_ok(upper[upper.size() - 2], upper.back(), pt)) {
        upper.pop_back();
      }
      upper.push_back(pt);
    }
  }
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  poly.verts_ = std::move(lower);
  return poly;
}

bool Polygon::contains(const Vec2& p) const {
  if (size() == 1) return p == verts_[0];
  if (size() == 2) return point_on_segment(p, verts_[0], verts_[1]);
  for (int i = 0; i < size(); ++i) {
    const Vec2& a = verts_[i];
    const Vec2& b = verts_[(i + 1) % size()];
    if (cross(b - a, p - a) < Rational(0)) return false;
  }
  return true;
}

bool Polygon::on_boundary(const Vec2& p) const {
  if (size() == 1) return p == verts_[0];
  if (size() == 2) return point_on_segment(p, verts_[0], verts_[1]);
  for (int i = 0; i < size(); ++i) {
    if (point_on_segment(p, verts_[i], verts_[(i + 1) % size()])) return true;
  }
  return false;
}

bool NormalCone::contains(const Vec2& d) const {
  if (d.x.is_zero() && d.y.is_zero()) {
    throw std::invalid_argument("cone: zero direction");
  }
  switch (kind) {
    case Kind::kFull:
      return true;
    case Kind::kLine:
      return cross(lo, d).is_zero();
    default:
      return parallel_pos(lo, d) || parallel_pos(hi, d) ||
             (cross(lo, d) > Rational(0) && cross(d, hi) > Rational(0));
  }
}

bool NormalCone::meets_open_positive_quadrant() const {
  if (kind == Kind::kFull) return true;
  return strictly_positive(lo) || strictly_positive(hi) ||
         contains(Vec2{Rational(1), Rational(1)});
}

std::optional<NormalCone> NormalCone::positive_part() const {
  const Vec2 ex{Rational(1), Rational(0)};
  const Vec2 ey{Rational(0), Rational(1)};
  switch (kind) {
    case Kind::kFull:
      return NormalCone{Kind::kWedge, ex, ey};
    case Kind::kRay:
      if (in_closed_quadrant(lo)) return *this;
      return std::nullopt;
    case Kind::kLine:
      if (in_closed_quadrant(lo)) return make_ray(lo);
      if (in_closed_quadrant(hi)) return make_ray(hi);
      return std::nullopt;
    default: {
      std::optional<Vec2> nlo, nhi;
      if (in_closed_quadrant(lo)) {
        nlo = lo;
      } else if (contains(ex)) {
        nlo = ex;
      }
      if (in_closed_quadrant(hi)) {
        nhi = hi;
      } else if (contains(ey)) {
        nhi = ey;
      }
      if (!nlo && !nhi) return std::nullopt;
      if (!nlo) return make_ray(*nhi);
      if (!nhi) return make_ray(*nlo);
      if (parallel_pos(*nlo, *nhi)) return make_ray(*nlo);
      return NormalCone{Kind::kWedge, canonical_direction(*nlo),
                        canonical_direction(*nhi)};
    }
  }
}

std::optional<NormalCone> intersect_in_quadrant(const NormalCone& a,
                                                const NormalCone& b) {
  const Vec2& lo = cross(a.lo, b.lo) >= Rational(0) ? b.lo : a.lo;
  const Vec2& hi = cross(a.hi, b.hi) >= Rational(0) ? a.hi : b.hi;
  Rational c = cross(lo, hi);
  if (c > Rational(0)) {
    return NormalCone{NormalCone::Kind::kWedge, canonical_direction(lo),
                      canonical_direction(hi)};
  }
  if (c.is_zero() && dot2(lo, hi) > Rational(0)) return make_ray(lo);
  return std::nullopt;
}

Polygon minkowski_sum(
    const std::vector<std::pair<Rational, Polygon>>& terms) {
  if (terms.empty()) throw std::invalid_argument("minkowski_sum: no terms");
  std::optional<Polygon> acc;
  for (const auto& [w, poly] : terms) {
    if (w <= Rational(0)) {
      throw std::invalid_argument("minkowski_sum: non-positive weight");
    }
    Polygon scaled = scale(poly, w);
    acc = acc ? pairwise_sum(*acc, scaled) : scaled;
  }
  return *acc;
}

Face support_set(const Polygon& p, const Vec2& direction) {
  if (direction.x.is_zero() && direction.y.is_zero()) {
    throw std::invalid_argument("support_set: zero direction");
  }
  Rational best;
  bool first = true;
  for (const auto& v : p.vertices()) {
    Rational val = dot2(direction, v);
    if (first || val > best) {
      best = val;
      first = false;
    }
  }
  Face face;
  for (const auto& v : p.vertices()) {
    if (dot2(direction, v) == best) face.points.push_back(v);
  }
  std::sort(face.points.begin(), face.points.end(), lex_less);
  return face;
}

NormalCone normal_cone_at(const Polygon& p, const Vec2& point) {
  if (!p.on_boundary(point)) {
    throw std::invalid_argument("normal_cone_at: point not on boundary");
  }
  if (p.is_point()) {
    return NormalCone{NormalCone::Kind::kFull,
                      Vec2{Rational(1), Rational(0)},
                      Vec2{Rational(0), Rational(1)}};
  }
  if (p.is_segment()) {
    const Vec2& a = p.vertex(0);
    const Vec2& b = p.vertex(1);
    if (point == a || point == b) {
      Vec2 outward = point == a ? a - b : b - a;
      return NormalCone{NormalCone::Kind::kHalfPlane,
                        canonical_direction(rot_cw(outward)),
                        canonical_direction(Rational(-1) * rot_cw(outward))};
    }
    Vec2 n = canonical_direction(rot_cw(b - a));
    return NormalCone{NormalCone::Kind::kLine, n, Rational(-1) * n};
  }
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    if (point == p.vertex(i)) {
      Vec2 incoming = p.vertex(i) - p.vertex((i + n - 1) % n);
      Vec2 outgoing = p.vertex((i + 1) % n) - p.vertex(i);
      return NormalCone{NormalCone::Kind::kWedge,
                        canonical_direction(rot_cw(incoming)),
                        canonical_direction(rot_cw(outgoing))};
    }
  }
  for (int i = 0; i < n; ++i) {
    const Vec2& a = p.vertex(i);
    const Vec2& b = p.vertex((i + 1) % n);
    if (point_on_segment(point, a, b)) {
      return make_ray(rot_cw(b - a));
    }
  }
  throw std::invalid_argument("normal_cone_at: point not on boundary");
}

Polygon state_payoff_polygon(const Game& game, int state) {
  if (game.players() != 2) {
    throw std::invalid_argument("geometry2d: two-player games only");
  }
  std::vector<Vec2> pts;
  for (int a = 0; a < game.num_joint(); ++a) {
    pts.push_back(Vec2{game.payoff(state, a, 0), game.payoff(state, a, 1)});
  }
  return Polygon::hull(pts);
}

Polygon ex_ante_payoff_polygon(const Game& game) {
  std::vector<std::pair<Rational, Polygon>> terms;
  for (int w = 0; w < game.num_states(); ++w) {
    terms.emplace_back(game.prior(w), state_payoff_polygon(game, w));
  }
  return minkowski_sum(terms);
}

FigureBundle figure_data(const Game& game, const Outcome& outcome) {
  if (game.players() != 2) {
    throw std::invalid_argument("figure_data: two-player games only");
  }
  FigureBundle fb;
  Vec u = induced_payoff(game, outcome);
  fb.ex_ante_point = Vec2{u[0], u[1]};
  fb.ex_ante_set = ex_ante_payoff_polygon(game);
  std::optional<NormalCone> common;
  bool all_supported = true;
  for (int w = 0; w < game.num_states(); ++w) {
    fb.state_sets.push_back(state_payoff_polygon(game, w));
    Vec su = state_payoff(game, outcome, w);
    fb.state_points.push_back(Vec2{su[0], su[1]});
    ConeAtPoint cp;
    cp.on_boundary = fb.state_sets[w].on_boundary(fb.state_points[w]);
    if (cp.on_boundary) {
      cp.cone = normal_cone_at(fb.state_sets[w], fb.state_points[w]);
      cp.positive_cone = cp.cone->positive_part();
    }
    if (!cp.on_boundary || !cp.positive_cone) {
      all_supported = false;
    } else if (all_supported) {
      common = common ? intersect_in_quadrant(*common, *cp.positive_cone)
                      : cp.positive_cone;
      if (!common) all_supported = false;
    }
    fb.state_cones.push_back(std::move(cp));
  }
  fb.common_positive_normal =
      all_supported && common && common->meets_open_positive_quadrant();
  fb.ex_ante_cone.on_boundary =
      fb.ex_ante_set.on_boundary(fb.ex_ante_point);
  if (fb.ex_ante_cone.on_boundary) {
    fb.ex_ante_cone.cone = normal_cone_at(fb.ex_ante_set, fb.ex_ante_point);
    fb.ex_ante_cone.positive_cone = fb.ex_ante_cone.cone->positive_part();
  }
  return fb;
}

}  // namespace effgames::geometry2d
