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

#include "effgames/game.hpp"
#include "effgames/allocation.hpp"
#include "effgames/cheaptalk.hpp"
#include "effgames/io.hpp"
#include "effgames/sampling.hpp"

using namespace effgames;  // NOLINT

namespace {

// The running two-player example: one dummy sender action, five receiver
// actions, two states.
Game example1(const Rational& p1) {
  std::vector<Mat> payoffs(2);
  auto pay = [](std::initializer_list<std::pair<int, Rational>> rows) {
    Mat m;
    for (auto [s, r] : rows) m.push_back({Rational(s), r});
    return m;
  };
  payoffs[0] = pay({{2, Rational(9)},
                    {10, Rational(8)},
                    {0, Rational(32, 5)},
                    {3, Rational(4)},
                    {1, Rational(0)}});
  payoffs[1] = pay({{2, Rational(0)},
                    {10, Rational(4)},
                    {0, Rational(32, 5)},
                    {3, Rational(8)},
                    {1, Rational(9)}});
  return Game::create({"w0", "w1"}, {Rational(1) - p1, p1},
                      {{"s"}, {"a0", "a1", "a2", "a3", "a4"}},
                      std::move(payoffs));
}

Outcome outcome_a() {
  return Outcome::create({{Rational(5, 9), Rational(4, 9), Rational(0),
                           Rational(0), Rational(0)},
                          {Rational(0), Rational(1), Rational(0), Rational(0),
                           Rational(0)}});
}

Outcome outcome_b() { return Outcome::pure(2, 5, {1, 1}); }

Outcome outcome_c() {
  return Outcome::create({{Rational(0), Rational(1), Rational(0), Rational(0),
                           Rational(0)},
                          {Rational(0), Rational(2, 7), Rational(0),
                           Rational(0), Rational(5, 7)}});
}

}  // namespace

TEST_CASE("game validation") {
  CHECK_THROWS_AS(Game::create({"w"}, {Rational(1)}, {{"a"}},
                               {{{Rational(0)}}}),
                  std::invalid_argument);  // one player
  CHECK_THROWS_AS(
      Game::create({"w0", "w1"}, {Rational(1, 2), Rational(1, 3)},
                   {{"x"}, {"y"}},
                   {{{Rational(0), Rational(0)}}, {{Rational(0), Rational(0)}}}),
      std::invalid_argument);  // prior does not sum to 1
  CHECK_THROWS_AS(
      Game::create({"w0", "w1"}, {Rational(1), Rational(0)}, {{"x"}, {"y"}},
                   {{{Rational(0), Rational(0)}}, {{Rational(0), Rational(0)}}}),
      std::invalid_argument);  // prior not interior
}

TEST_CASE("joint actions are row-major over the per-player lists") {
  Game g = Game::create(
      {"w"}, {Rational(1)}, {{"x0", "x1"}, {"y0", "y1", "y2"}},
      {Mat(6, Vec{Rational(0), Rational(0)})});
  CHECK(g.num_joint() == 6);
  CHECK(g.joint_label(0) == "x0,y0");
  CHECK(g.joint_label(1) == "x0,y1");
  CHECK(g.joint_label(3) == "x1,y0");
  CHECK(g.profile_to_joint({1, 2}) == 5);
  CHECK(g.joint_to_profile(4) == std::vector<int>{1, 1});
  CHECK(g.find_joint_label("x1,y2") == 5);
  CHECK(!g.find_joint_label("x1,z9").has_value());
}

TEST_CASE("induced payoff of the worked outcomes") {
  CHECK(induced_payoff(example1(Rational(1, 10)), outcome_a()) ==
        Vec{Rational(6), Rational(81, 10)});
  CHECK(induced_payoff(example1(Rational(3, 10)), outcome_b()) ==
        Vec{Rational(10), Rational(34, 5)});
  CHECK(induced_payoff(example1(Rational(7, 10)), outcome_c()) ==
        Vec{Rational(11, 2), Rational(77, 10)});
}

TEST_CASE("degenerate outcome concentrated on one profile") {
  Game g = example1(Rational(2, 5));
  Outcome pure = Outcome::pure(2, 5, {3, 3});
  Vec expect(2);
  for (int w = 0; w < 2; ++w) {
    for (int i = 0; i < 2; ++i) expect[i] += g.prior(w) * g.payoff(w, 3, i);
  }
  CHECK(induced_payoff(g, pure) == expect);
}

TEST_CASE("state payoffs") {
  Game g = example1(Rational(1, 10));
  CHECK(state_payoff(g, outcome_a(), 0) == Vec{Rational(50, 9), Rational(77, 9)});
  CHECK(state_payoff(g, outcome_b(), 1) == Vec{Rational(10), Rational(4)});
  CHECK_THROWS_AS(state_payoff(g, outcome_a(), 7), std::invalid_argument);
  // A uniform mixture over identical-payoff profiles returns that payoff.
  Game twin = Game::create(
      {"w"}, {Rational(1)}, {{"l", "r"}, {"c"}},
      {{{Rational(3), Rational(5)}, {Rational(3), Rational(5)}}});
  Outcome half = Outcome::create({{Rational(1, 2), Rational(1, 2)}});
  CHECK(state_payoff(twin, half, 0) == Vec{Rational(3), Rational(5)});
}

TEST_CASE("linearity: induced payoff decomposes over states") {
  sampling::Rng rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    Game g = sampling::random_game(rng, 2, 3, {2, 2}, 20);
    auto plan = sampling::random_support_plan(rng, 3, 4, 3, 12);
    Outcome mu = sampling::random_outcome(rng, g, plan, 20);
    Vec total(2);
    for (int w = 0; w < 3; ++w) {
      Vec sp = state_payoff(g, mu, w);
      for (int i = 0; i < 2; ++i) total[i] += g.prior(w) * sp[i];
    }
    CHECK(induced_payoff(g, mu) == total);
  }
}

TEST_CASE("support counts of the worked outcomes") {
  auto a = support_counts(outcome_a());
  CHECK(a.per_state == std::vector<int>{2, 1});
  CHECK(a.total == 3);
  auto b = support_counts(outcome_b());
  CHECK(b.per_state == std::vector<int>{1, 1});
  CHECK(b.total == 2);
  auto c = support_counts(outcome_c());
  CHECK(c.per_state == std::vector<int>{1, 2});
  CHECK(c.total == 3);
}

TEST_CASE("outcome rows must be exact probability vectors") {
  CHECK_THROWS_AS(Outcome::create({{Rational(1, 2), Rational(1, 3)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Outcome::create({{Rational(3, 2), Rational(-1, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("outcome from a constant joint rule") {
  Game g = example1(Rational(1, 2));
  DecisionRuleProfile profile;
  profile.type_sets = {{"t"}, {"u0", "u1"}};
  profile.type_dist = {{Rational(1, 2), Rational(1, 2)},
                       {Rational(1, 2), Rational(1, 2)}};
  JointRule rule;
  rule.action = {{2, 2}, {2, 2}};  // a2 regardless of type and state
  profile.rule = rule;
  Outcome mu = outcome_from_rule(g, profile);
  CHECK(mu.prob(0, 2) == Rational(1));
  CHECK(mu.prob(1, 2) == Rational(1));
}

TEST_CASE("outcome from per-player rules: brute-force pushforward") {
  // Two players, two types each, uniform full-support type distribution.
  Game g = Game::create(
      {"w0", "w1"}, {Rational(1, 2), Rational(1, 2)},
      {{"x0", "x1"}, {"y0", "y1"}},
      {Mat(4, Vec{Rational(0), Rational(0)}), Mat(4, Vec{Rational(1), Rational(1)})});
  DecisionRuleProfile profile;
  profile.type_sets = {{"s0", "s1"}, {"r0", "r1"}};
  profile.type_dist = Mat(2, Vec(4, Rational(1, 4)));
  PerPlayerRule rule;
  rule.action = {{0, 1}, {1, 0}};  // each player separates own types
  profile.rule = rule;
  Outcome mu = outcome_from_rule(g, profile);
  // Type profiles map to (x_t1, y_(1-t2)); each has mass 1/4.
  for (int w = 0; w < 2; ++w) {
    CHECK(mu.prob(w, g.profile_to_joint({0, 1})) == Rational(1, 4));
    CHECK(mu.prob(w, g.profile_to_joint({0, 0})) == Rational(1, 4));
    CHECK(mu.prob(w, g.profile_to_joint({1, 1})) == Rational(1, 4));
    CHECK(mu.prob(w, g.profile_to_joint({1, 0})) == Rational(1, 4));
    CHECK(mu.support(w).size() == 4);
  }
}

TEST_CASE("zero-mass types contribute nothing") {
  Game g = Game::create(
      {"w"}, {Rational(1)}, {{"x0", "x1"}, {"y"}},
      {{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}});
  DecisionRuleProfile profile;
  profile.type_sets = {{"t0", "t1"}, {"u"}};
  profile.type_dist = {{Rational(1), Rational(0)}};
  PerPlayerRule rule;
  rule.action = {{0, 1}, {0}};
  profile.rule = rule;
  Outcome mu = outcome_from_rule(g, profile);
  CHECK(mu.prob(0, g.profile_to_joint({1, 0})) == Rational(0));
  CHECK(mu.prob(0, g.profile_to_joint({0, 0})) == Rational(1));
}

TEST_CASE("full-support mixing yields mixed rows in every state") {
  sampling::Rng rng(7);
  for (int iter = 0; iter < 20; ++iter) {
    Game g = sampling::random_game(rng, 2, 2, {2, 2}, 10);
    DecisionRuleProfile profile;
    profile.type_sets = {{"t0", "t1"}, {"u0", "u1"}};
    profile.type_dist.assign(2, sampling::random_interior_distribution(rng, 4, 10));
    PerPlayerRule rule;
    rule.action = {{0, 1}, {static_cast<int>(rng.engine()() % 2),
                            static_cast<int>(rng.engine()() % 2)}};
    profile.rule = rule;
    Outcome mu = outcome_from_rule(g, profile);
    for (int w = 0; w < 2; ++w) {
      CHECK(mu.support(w).size() >= 2);
    }
  }
}

TEST_CASE("game JSON round-trip, decimals land exactly") {
  Game g = example1(Rational(3, 10));
  std::string text = io::game_to_json(g);
  Game back = io::game_from_json(text);
  CHECK(back.states() == g.states());
  CHECK(back.prior() == g.prior());
  for (int w = 0; w < 2; ++w) {
    for (int a = 0; a < 5; ++a) CHECK(back.payoff(w, a) == g.payoff(w, a));
  }
  // Decimal literals parse to exact fractions.
  Game dec = io::game_from_json(R"({
    "states": ["w"], "prior": [1],
    "actions": [["s"], ["x"]],
    "payoffs": {"w": {"s,x": [6.4, -0.35]}}
  })");
  CHECK(dec.payoff(0, 0, 0) == Rational(32, 5));
  CHECK(dec.payoff(0, 0, 1) == Rational(-7, 20));
}

TEST_CASE("outcome JSON: omitted entries are zero, round-trip is exact") {
  Game g = example1(Rational(3, 10));
  Outcome mu = outcome_a();
  std::string text = io::outcome_to_json(g, mu);
  Outcome back = io::outcome_from_json(g, text);
  CHECK(back.rows() == mu.rows());
  Outcome sparse = io::outcome_from_json(
      g, R"({"w0": {"s,a1": 1}, "w1": {"s,a1": "2/7", "s,a4": "5/7"}})");
  CHECK(sparse.prob(0, 0) == Rational(0));
  CHECK(sparse.prob(1, 4) == Rational(5, 7));
}

TEST_CASE("profile and instance documents round-trip") {
  auto srg = persuasion::SenderReceiverGame::from_game(example1(Rational(1, 2)));
  cheaptalk::CheapTalkProfile profile;
  profile.messages = {"m1", "m2", "m3", "m4", "m5"};
  profile.sender.assign(2, Vec(5, Rational(0)));
  profile.sender[0][0] = Rational(3, 5);
  profile.sender[0][1] = Rational(2, 5);
  profile.sender[1][0] = Rational(2, 5);
  profile.sender[1][1] = Rational(3, 5);
  profile.receiver.assign(5, Vec(5, Rational(0)));
  profile.receiver[0][1] = Rational(3, 10);
  profile.receiver[0][2] = Rational(7, 10);
  for (int m = 1; m < 5; ++m) profile.receiver[m][3] = Rational(1);
  auto back = io::profile_from_json(srg, io::profile_to_json(srg, profile));
  CHECK(back.messages == profile.messages);
  CHECK(back.sender == profile.sender);
  CHECK(back.receiver == profile.receiver);

  auto inst = allocation::AllocationInstance::create(
      {{"L", "H"}, {"L", "H"}}, Vec(4, Rational(1, 4)),
      {{Rational(1, 5), Rational(2, 5)},
       {Rational(3, 5), Rational(2, 5)},
       {Rational(1, 5), Rational(3, 10)},
       {Rational(3, 5), Rational(3, 10)}},
      Rational(1));
  auto inst_back = io::instance_from_json(io::instance_to_json(inst));
  CHECK(inst_back.type_sets() == inst.type_sets());
  CHECK(inst_back.prior() == inst.prior());
  CHECK(inst_back.t() == inst.t());
  for (int s = 0; s < 4; ++s) {
    for (int i = 0; i < 2; ++i) {
      CHECK(inst_back.value(s, i) == inst.value(s, i));
    }
  }
}

TEST_CASE("malformed documents raise parse errors") {
  CHECK_THROWS_AS(io::game_from_json("{ not json"), io::ParseError);
  CHECK_THROWS_AS(io::game_from_json(R"({"states": ["w"]})"), io::ParseError);
  Game g = example1(Rational(3, 10));
  CHECK_THROWS_AS(io::outcome_from_json(g, R"({"w9": {"s,a1": 1}})"),
                  io::ParseError);
  // Rows that fail to sum to one are rejected by the outcome type.
  CHECK_THROWS_AS(io::outcome_from_json(g, R"({"w0": {"s,a1": "1/2"},
                                               "w1": {"s,a1": 1}})"),
                  io::ParseError);
}
