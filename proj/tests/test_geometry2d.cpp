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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "effgames/efficiency.hpp"
#include "effgames/geometry2d.hpp"
#include "effgames/sampling.hpp"

using namespace effgames;              // NOLINT
using namespace effgames::geometry2d;  // NOLINT

namespace {

Vec2 pt(long long x, long long y) { return Vec2{Rational(x), Rational(y)}; }

Game example1(const Rational& p1) {
  std::vector<Mat> payoffs(2);
  payoffs[0] = {{Rational(2), Rational(9)},
                {Rational(10), Rational(8)},
                {Rational(0), Rational(32, 5)},
                {Rational(3), Rational(4)},
                {Rational(1), Rational(0)}};
  payoffs[1] = {{Rational(2), Rational(0)},
                {Rational(10), Rational(4)},
                {Rational(0), Rational(32, 5)},
                {Rational(3), Rational(8)},
                {Rational(1), Rational(9)}};
  return Game::create({"w0", "w1"}, {Rational(1) - p1, p1},
                      {{"s"}, {"a0", "a1", "a2", "a3", "a4"}},
                      std::move(payoffs));
}

// Independent route: the Minkowski sum of convex polygons is the hull of
// all pairwise vertex sums.
Polygon minkowski_oracle(const std::vector<std::pair<Rational, Polygon>>& terms) {
  std::vector<Vec2> points{Vec2{Rational(0), Rational(0)}};
  for (const auto& [w, poly] : terms) {
    std::vector<Vec2> next;
    for (const auto& base : points) {
      for (const auto& v : poly.vertices()) {
        next.push_back(base + w * v);
      }
    }
    points = std::move(next);
  }
  return Polygon::hull(points);
}

}  // namespace

TEST_CASE("hull of the first worked state set") {
  Polygon p = Polygon::hull({pt(2, 9), pt(10, 8),
                             Vec2{Rational(0), Rational(32, 5)}, pt(3, 4),
                             pt(1, 0)});
  // (3,4) is interior; CCW from the lexicographically least vertex.
  REQUIRE(p.size() == 4);
  CHECK(p.vertex(0) == Vec2{Rational(0), Rational(32, 5)});
  CHECK(p.vertex(1) == pt(1, 0));
  CHECK(p.vertex(2) == pt(10, 8));
  CHECK(p.vertex(3) == pt(2, 9));
}

TEST_CASE("hull of the second worked state set keeps all five points") {
  Polygon p = Polygon::hull({pt(2, 0), pt(10, 4),
                             Vec2{Rational(0), Rational(32, 5)}, pt(3, 8),
                             pt(1, 9)});
  CHECK(p.size() == 5);
  CHECK(p.contains(pt(3, 8)));
  CHECK(p.on_boundary(pt(3, 8)));
}

TEST_CASE("hull degeneracies") {
  Polygon single = Polygon::hull({pt(3, 3), pt(3, 3)});
  CHECK(single.is_point());
  Polygon seg = Polygon::hull({pt(0, 0), pt(2, 2), pt(1, 1)});
  CHECK(seg.is_segment());
  CHECK(seg.vertex(0) == pt(0, 0));
  CHECK(seg.vertex(1) == pt(2, 2));
  CHECK_THROWS_AS(Polygon::hull({}), std::invalid_argument);
}

TEST_CASE("hull idempotence on random point sets") {
  sampling::Rng rng(555);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Vec2> pts;
    int n = 1 + rng.uniform_int(0, 9);
    for (int i = 0; i < n; ++i) {
      pts.push_back(Vec2{sampling::random_rational(rng, 10, -5, 5),
                         sampling::random_rational(rng, 10, -5, 5)});
    }
    Polygon h = Polygon::hull(pts);
    CHECK(Polygon::hull(h.vertices()) == h);
    for (const auto& p : pts) CHECK(h.contains(p));
  }
}

TEST_CASE("weighted Minkowski sum of the worked sets") {
  Game g = example1(Rational(1, 10));
  Polygon f0 = state_payoff_polygon(g, 0);
  Polygon f1 = state_payoff_polygon(g, 1);

  SUBCASE("panel (a): the outcome payoff is interior, hence unsupported") {
    Polygon fp = minkowski_sum({{Rational(9, 10), f0}, {Rational(1, 10), f1}});
    Vec2 point{Rational(6), Rational(81, 10)};
    CHECK(fp.contains(point));
    CHECK(!fp.on_boundary(point));
  }
  SUBCASE("panel (b): the pure outcome payoff sits on the boundary") {
    Polygon fp = minkowski_sum({{Rational(7, 10), f0}, {Rational(3, 10), f1}});
    Vec2 point{Rational(10), Rational(34, 5)};
    CHECK(fp.on_boundary(point));
  }
  SUBCASE("adding a single point translates") {
    Polygon shift = Polygon::hull({pt(3, -2)});
    Polygon moved = minkowski_sum({{Rational(1), f0}, {Rational(1), shift}});
    REQUIRE(moved.size() == f0.size());
    for (int i = 0; i < f0.size(); ++i) {
      CHECK(moved.vertex(i) == f0.vertex(i) + pt(3, -2));
    }
  }
  SUBCASE("support function is additive at (1,1)") {
    Polygon fp = minkowski_sum({{Rational(9, 10), f0}, {Rational(1, 10), f1}});
    Vec2 n{Rational(1), Rational(1)};
    auto h = [&n](const Polygon& poly) {
      Rational best;
      bool first = true;
      for (const auto& v : poly.vertices()) {
        Rational val = dot2(n, v);
        if (first || val > best) best = val, first = false;
      }
      return best;
    };
    CHECK(h(fp) == Rational(9, 10) * h(f0) + Rational(1, 10) * h(f1));
  }
  SUBCASE("non-positive weights are rejected") {
    CHECK_THROWS_AS(minkowski_sum({{Rational(0), f0}}), std::invalid_argument);
  }
}

TEST_CASE("edge merge agrees with the hull-of-sums oracle") {
  sampling::Rng rng(808);
  for (int iter = 0; iter < 80; ++iter) {
    std::vector<std::pair<Rational, Polygon>> terms;
    int k = 1 + rng.uniform_int(0, 2);
    Vec weights = sampling::random_interior_distribution(rng, k, 10);
    for (int t = 0; t < k; ++t) {
      std::vector<Vec2> pts;
      int n = 1 + rng.uniform_int(0, 5);
      for (int i = 0; i < n; ++i) {
        pts.push_back(Vec2{sampling::random_rational(rng, 6, -4, 4),
                           sampling::random_rational(rng, 6, -4, 4)});
      }
      terms.emplace_back(weights[t], Polygon::hull(pts));
    }
    CHECK(minkowski_sum(terms) == minkowski_oracle(terms));
  }
}

TEST_CASE("support sets of the worked sets") {
  Game g = example1(Rational(1, 2));
  Polygon f0 = state_payoff_polygon(g, 0);
  Polygon f1 = state_payoff_polygon(g, 1);
  Face e = support_set(f0, pt(1, 8));
  REQUIRE(e.is_edge());
  CHECK(e.points[0] == pt(2, 9));
  CHECK(e.points[1] == pt(10, 8));
  Face v = support_set(f1, pt(1, 0));
  REQUIRE(!v.is_edge());
  CHECK(v.points[0] == pt(10, 4));
  Polygon square = Polygon::hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
  Face top = support_set(square, pt(0, 1));
  REQUIRE(top.is_edge());
  CHECK(top.points[0] == pt(0, 1));
  CHECK(top.points[1] == pt(1, 1));
  CHECK_THROWS_AS(support_set(square, pt(0, 0)), std::invalid_argument);
}

TEST_CASE("normal cones at the worked boundary points") {
  Game g = example1(Rational(1, 2));
  Polygon f0 = state_payoff_polygon(g, 0);
  Polygon f1 = state_payoff_polygon(g, 1);

  SUBCASE("vertex (10,4): raw cone and its positive part") {
    NormalCone cone = normal_cone_at(f1, pt(10, 4));
    CHECK(cone.kind == NormalCone::Kind::kWedge);
    CHECK(cone.lo == pt(1, -2));
    CHECK(cone.hi == pt(4, 7));
    auto positive = cone.positive_part();
    REQUIRE(positive.has_value());
    CHECK(positive->lo == pt(1, 0));
    CHECK(positive->hi == pt(4, 7));
  }
  SUBCASE("edge interior between the first two actions: single ray") {
    NormalCone cone = normal_cone_at(f0, Vec2{Rational(50, 9), Rational(77, 9)});
    CHECK(cone.kind == NormalCone::Kind::kRay);
    CHECK(cone.lo == pt(1, 8));
    CHECK(cone.hi == pt(1, 8));
  }
  SUBCASE("unit square corner") {
    Polygon square = Polygon::hull({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)});
    NormalCone cone = normal_cone_at(square, pt(1, 1));
    CHECK(cone.lo == pt(1, 0));
    CHECK(cone.hi == pt(0, 1));
  }
  SUBCASE("interior points are rejected") {
    CHECK_THROWS_AS(normal_cone_at(f0, pt(5, 5)), std::invalid_argument);
  }
  SUBCASE("segment endpoints carry half-planes") {
    Polygon seg = Polygon::hull({pt(0, 0), pt(2, 1)});
    NormalCone end = normal_cone_at(seg, pt(2, 1));
    CHECK(end.kind == NormalCone::Kind::kHalfPlane);
    CHECK(end.contains(pt(2, 1)));
    CHECK(end.contains(pt(1, -2)));
    CHECK(!end.contains(pt(-2, -1)));
    NormalCone mid = normal_cone_at(seg, Vec2{Rational(1), Rational(1, 2)});
    CHECK(mid.kind == NormalCone::Kind::kLine);
    CHECK(mid.contains(pt(1, -2)));
    CHECK(mid.contains(pt(-1, 2)));
    CHECK(!mid.contains(pt(2, 1)));
  }
}

TEST_CASE("figure bundle for the worked outcomes") {
  SUBCASE("case (a): no common positive normal") {
    Game g = example1(Rational(1, 10));
    Outcome mu = Outcome::create(
        {{Rational(5, 9), Rational(4, 9), Rational(0), Rational(0), Rational(0)},
         {Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)}});
    auto fb = figure_data(g, mu);
    CHECK(fb.state_cones[0].on_boundary);
    CHECK(fb.state_cones[1].on_boundary);
    REQUIRE(fb.state_cones[0].positive_cone.has_value());
    REQUIRE(fb.state_cones[1].positive_cone.has_value());
    // The only candidate in the first state is the ray (1,8), and it lies
    // outside the second state's positive cone [(1,0),(4,7)].
    CHECK(fb.state_cones[0].positive_cone->lo == pt(1, 8));
    CHECK(!fb.state_cones[1].positive_cone->contains(pt(1, 8)));
    CHECK(!fb.common_positive_normal);
    CHECK(!fb.ex_ante_cone.on_boundary);
  }
  SUBCASE("case (b): common normal exists, payoff on the boundary") {
    Game g = example1(Rational(3, 10));
    Outcome mu = Outcome::pure(2, 5, {1, 1});
    auto fb = figure_data(g, mu);
    CHECK(fb.common_positive_normal);
    CHECK(fb.ex_ante_point == Vec2{Rational(10), Rational(34, 5)});
    CHECK(fb.ex_ante_cone.on_boundary);
  }
  SUBCASE("single-state game: the ex-ante set equals the state set") {
    Game g1 = Game::create(
        {"w"}, {Rational(1)}, {{"s"}, {"x", "y"}},
        {{{Rational(1), Rational(2)}, {Rational(3), Rational(1)}}});
    auto fb = figure_data(g1, Outcome::pure(1, 2, {0}));
    CHECK(fb.ex_ante_set == fb.state_sets[0]);
  }
}

TEST_CASE("maximizer identity on random games and directions") {
  sampling::Rng rng(4242);
  for (int iter = 0; iter < 25; ++iter) {
    int ns = 2 + rng.uniform_int(0, 1);
    Game g = sampling::random_game(rng, 2, ns, {1, 3}, 12);
    std::vector<std::pair<Rational, Polygon>> terms;
    for (int w = 0; w < ns; ++w) {
      terms.emplace_back(g.prior(w), state_payoff_polygon(g, w));
    }
    Polygon fp = minkowski_sum(terms);
    for (int d = 0; d < 25; ++d) {
      Vec2 n{sampling::random_rational(rng, 8, -6, 6),
             sampling::random_rational(rng, 8, -6, 6)};
      if (n.x.is_zero() && n.y.is_zero()) continue;
      Face left = support_set(fp, n);
      std::vector<std::pair<Rational, Polygon>> faces;
      for (int w = 0; w < ns; ++w) {
        faces.emplace_back(g.prior(w),
                           Polygon::hull(support_set(terms[w].second, n).points));
      }
      Polygon right = minkowski_sum(faces);
      CHECK(Polygon::hull(left.points) == right);
    }
  }
}

TEST_CASE("boundary efficiency matches the positive-quadrant test") {
  sampling::Rng rng(9090);
  for (int iter = 0; iter < 60; ++iter) {
    int ns = 2;
    Game g = sampling::random_game(rng, 2, ns, {1, 3}, 20);
    std::vector<std::pair<Rational, Polygon>> terms;
    for (int w = 0; w < ns; ++w) {
      terms.emplace_back(g.prior(w), state_payoff_polygon(g, w));
    }
    Polygon fp = minkowski_sum(terms);
    Vec2 n{sampling::random_rational(rng, 8, -6, 6),
           sampling::random_rational(rng, 8, -6, 6)};
    if (n.x.is_zero() && n.y.is_zero()) continue;
    // Build a pure outcome supporting the chosen direction in every state.
    std::vector<int> actions;
    for (int w = 0; w < ns; ++w) {
      int best = 0;
      Rational best_val;
      bool first = true;
      for (int a = 0; a < g.num_joint(); ++a) {
        Rational val = n.x * g.payoff(w, a, 0) + n.y * g.payoff(w, a, 1);
        if (first || val > best_val) {
          best = a;
          best_val = val;
          first = false;
        }
      }
      actions.push_back(best);
    }
    Outcome mu = Outcome::pure(ns, g.num_joint(), actions);
    Vec u = induced_payoff(g, mu);
    Vec2 point{u[0], u[1]};
    REQUIRE(fp.on_boundary(point));
    bool geometric =
        normal_cone_at(fp, point).meets_open_positive_quadrant();
    bool lp_says = efficiency::ex_ante_efficient_cone(g, mu).efficient();
    CHECK(geometric == lp_says);
  }
}
