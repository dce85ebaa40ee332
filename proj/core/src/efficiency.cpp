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

#include "effgames/efficiency.hpp"

#include <stdexcept>

#include "effgames/lp.hpp"

namespace effgames::efficiency {

namespace {

using lp::LinearProgram;
using lp::LpStatus;
using lp::RowSense;
using lp::VarBound;

// Feasibility system of the common-normal side: n_i >= 1 and n.d <= 0 for
// every deviation. Valid encoding of n > 0 because the system is
// homogeneous in n.
std::optional<Vec> common_normal(const DeviationSet& devs) {
  const int k = devs.players;
  LinearProgram sys = LinearProgram::maximize(Vec(k, Rational(0)));
  sys.bounds.assign(k, VarBound::kFree);
  for (int i = 0; i < k; ++i) {
    Vec row(k, Rational(0));
    row[i] = Rational(1);
    sys.add_row(std::move(row), RowSense::kGe, Rational(1));
  }
  for (const auto& d : devs.items) {
    sys.add_row(d.delta, RowSense::kLe, Rational(0));
  }
  auto sol = lp::feasible_point(std::move(sys));
  if (!sol.optimal()) return std::nullopt;
  return sol.primal;
}

void check_normal(const DeviationSet& devs, const Vec& n) {
  for (const auto& w : n) {
    if (w < Rational(1)) {
      throw InternalInconsistency("efficiency: weight below 1");
    }
  }
  for (const auto& d : devs.items) {
    if (dot(n, d.delta) > Rational(0)) {
      throw InternalInconsistency("efficiency: weight fails a deviation");
    }
  }
}

// Variables nu(a|w) followed by one slack payoff variable per player and,
// optionally, a uniform-improvement variable delta. Encodes
// v = sum_w p(w) sum_a nu(a|w) u(w,a) and v - delta >= u(mu).
struct DominanceLp {
  LinearProgram prog;
  int num_vars = 0;
  int var(int w, int a, int num_joint) const { return w * num_joint + a; }
};

DominanceLp build_dominance_lp(const Game& game, const Vec& target,
                               bool with_delta) {
  const int k = game.players();
  const int ns = game.num_states();
  const int na = game.num_joint();
  const int nv = ns * na + (with_delta ? 1 : 0);
  DominanceLp dl;
  dl.num_vars = nv;
  Vec obj(nv, Rational(0));
  if (with_delta) {
    obj[nv - 1] = Rational(1);
  } else {
    for (int w = 0; w < ns; ++w) {
      for (int a = 0; a < na; ++a) {
        Rational s;
        for (int i = 0; i < k; ++i) s += game.payoff(w, a, i);
        obj[w * na + a] = game.prior(w) * s;
      }
    }
  }
  dl.prog = LinearProgram::maximize(std::move(obj));
  for (int w = 0; w < ns; ++w) {
    Vec row(nv, Rational(0));
    for (int a = 0; a < na; ++a) row[w * na + a] = Rational(1);
    dl.prog.add_row(std::move(row), RowSense::kEq, Rational(1));
  }
  for (int i = 0; i < k; ++i) {
    Vec row(nv, Rational(0));
    for (int w = 0; w < ns; ++w) {
      for (int a = 0; a < na; ++a) {
        row[w * na + a] = game.prior(w) * game.payoff(w, a, i);
      }
    }
    if (with_delta) row[nv - 1] = Rational(-1);
    dl.prog.add_row(std::move(row), RowSense::kGe, target[i]);
  }
  return dl;
}

Outcome outcome_from_flat(const Game& game, const Vec& flat) {
  Mat rows(game.num_states(), Vec(game.num_joint(), Rational(0)));
  for (int w = 0; w < game.num_states(); ++w) {
    for (int a = 0; a < game.num_joint(); ++a) {
      rows[w][a] = flat[w * game.num_joint() + a];
    }
  }
  return Outcome::create(std::move(rows));
}

// An inefficient point can still be undominated in the uniform sense; the
// strict definition classifies it inefficient, flagged separately.
bool is_weakly_efficient(const Game& game, const Vec& target) {
  auto dl = build_dominance_lp(game, target, /*with_delta=*/true);
  auto sol = lp::solve(dl.prog);
  if (!sol.optimal()) {
    throw InternalInconsistency("efficiency: delta LP not optimal");
  }
  return sol.value == Rational(0);
}

void fill_witness_checks(const Game& game, const Outcome& outcome,
                         EfficiencyReport& rep) {
  Vec base = induced_payoff(game, outcome);
  bool some_strict = false;
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (rep.dominating_point[i] < base[i]) {
      throw InternalInconsistency("efficiency: witness not dominating");
    }
    if (rep.dominating_point[i] > base[i]) some_strict = true;
  }
  if (!some_strict) {
    throw InternalInconsistency("efficiency: witness equals the outcome");
  }
  if (rep.dominating_outcome.has_value()) {
    Vec v = induced_payoff(game, *rep.dominating_outcome);
    if (v != rep.dominating_point) {
      throw InternalInconsistency("efficiency: witness point mismatch");
    }
  }
  rep.weakly_efficient = is_weakly_efficient(game, base);
}

}  // namespace

DeviationSet deviations(const Game& game, const Outcome& outcome) {
  if (outcome.num_states() != game.num_states() ||
      outcome.num_joint() != game.num_joint()) {
    throw std::invalid_argument("deviations: dimension mismatch");
  }
  DeviationSet ds;
  ds.players = game.players();
  for (int w = 0; w < game.num_states(); ++w) {
    Vec base = state_payoff(game, outcome, w);
    for (int a = 0; a < game.num_joint(); ++a) {
      ds.items.push_back({w, a, game.payoff(w, a) - base});
    }
  }
  return ds;
}

StateEfficiencyReport ex_post_efficient(const Game& game,
                                        const Outcome& outcome, int state) {
  if (state < 0 || state >= game.num_states()) {
    throw std::invalid_argument("ex_post_efficient: unknown state");
  }
  const int k = game.players();
  const int na = game.num_joint();
  Vec target = state_payoff(game, outcome, state);

  LinearProgram prog = LinearProgram::maximize(Vec(na, Rational(0)));
  for (int a = 0; a < na; ++a) {
    Rational s;
    for (int i = 0; i < k; ++i) s += game.payoff(state, a, i);
    prog.objective[a] = s;
  }
  prog.add_row(Vec(na, Rational(1)), RowSense::kEq, Rational(1));
  for (int i = 0; i < k; ++i) {
    Vec row(na);
    for (int a = 0; a < na; ++a) row[a] = game.payoff(state, a, i);
    prog.add_row(std::move(row), RowSense::kGe, target[i]);
  }
  auto sol = lp::solve(prog);
  if (!sol.optimal()) {
    throw InternalInconsistency("ex_post: improvement LP not optimal");
  }

  StateEfficiencyReport rep;
  rep.efficient = sol.value == sum(target);
  if (rep.efficient) {
    // Single-state deviation system; by the polytope alternative a
    // supporting positive weight must exist here.
    DeviationSet ds;
    ds.players = k;
    for (int a = 0; a < na; ++a) {
      ds.items.push_back({state, a, game.payoff(state, a) - target});
    }
    auto n = common_normal(ds);
    if (!n) {
      throw InternalInconsistency("ex_post: efficient but no normal");
    }
    check_normal(ds, *n);
    rep.weights = std::move(*n);
  } else {
    rep.dominating_mix = sol.primal;
    rep.dominating_point.assign(k, Rational(0));
    for (int i = 0; i < k; ++i) {
      for (int a = 0; a < na; ++a) {
        rep.dominating_point[i] += sol.primal[a] * game.payoff(state, a, i);
      }
    }
  }
  return rep;
}

EfficiencyReport ex_ante_efficient_cone(const Game& game,
                                        const Outcome& outcome) {
  DeviationSet devs = deviations(game, outcome);
  const int k = devs.players;
  const int nd = static_cast<int>(devs.items.size());

  // Improvement side: a nonnegative combination of deviations that lands in
  // the nonnegative orthant with positive total, mass capped at 1.
  LinearProgram cone = LinearProgram::maximize(Vec(nd, Rational(0)));
  for (int d = 0; d < nd; ++d) cone.objective[d] = sum(devs.items[d].delta);
  for (int i = 0; i < k; ++i) {
    Vec row(nd);
    for (int d = 0; d < nd; ++d) row[d] = devs.items[d].delta[i];
    cone.add_row(std::move(row), RowSense::kGe, Rational(0));
  }
  cone.add_row(Vec(nd, Rational(1)), RowSense::kLe, Rational(1));
  auto cone_sol = lp::solve(cone);
  if (!cone_sol.optimal()) {
    throw InternalInconsistency("cone: witness LP not optimal");
  }
  bool improvable = cone_sol.value > Rational(0);

  auto normal = common_normal(devs);
  if (improvable == normal.has_value()) {
    throw InternalInconsistency(
        "cone: both sides of the alternative agree, which is impossible");
  }

  EfficiencyReport rep;
  rep.method = Method::kCone;
  if (!improvable) {
    rep.verdict = Verdict::kEfficient;
    check_normal(devs, *normal);
    rep.weights = std::move(*normal);
    return rep;
  }

  rep.verdict = Verdict::kInefficient;
  Vec combined(k, Rational(0));
  Vec state_mass(game.num_states(), Rational(0));
  for (int d = 0; d < nd; ++d) {
    const Rational& l = cone_sol.primal[d];
    if (l.is_zero()) continue;
    rep.lambda[{devs.items[d].state, devs.items[d].joint}] = l;
    combined = combined + l * devs.items[d].delta;
    state_mass[devs.items[d].state] += l;
  }
  for (const auto& c : combined) {
    if (c < Rational(0)) {
      throw InternalInconsistency("cone: witness combination negative");
    }
  }
  // Shift outcome mass toward the witness mixture, scaled so every state
  // stays a probability row; the payoff moves by epsilon * combined.
  Rational eps;
  bool first = true;
  for (int w = 0; w < game.num_states(); ++w) {
    if (state_mass[w].is_zero()) continue;
    Rational cap = game.prior(w) / state_mass[w];
    if (first || cap < eps) eps = cap;
    first = false;
  }
  if (first) {
    throw InternalInconsistency("cone: witness has no mass");
  }
  Mat rows = outcome.rows();
  for (int w = 0; w < game.num_states(); ++w) {
    if (state_mass[w].is_zero()) continue;
    Rational t = eps * state_mass[w] / game.prior(w);
    for (int a = 0; a < game.num_joint(); ++a) {
      rows[w][a] = (Rational(1) - t) * rows[w][a];
      auto it = rep.lambda.find({w, a});
      if (it != rep.lambda.end()) {
        rows[w][a] += t * it->second / state_mass[w];
      }
    }
  }
  rep.dominating_outcome = Outcome::create(std::move(rows));
  rep.dominating_point = induced_payoff(game, outcome) + eps * combined;
  fill_witness_checks(game, outcome, rep);
  return rep;
}

EfficiencyReport ex_ante_efficient_dominance(const Game& game,
                                             const Outcome& outcome) {
  Vec target = induced_payoff(game, outcome);
  auto dl = build_dominance_lp(game, target, /*with_delta=*/false);
  auto sol = lp::solve(dl.prog);
  if (!sol.optimal()) {
    throw InternalInconsistency("dominance: LP not optimal");
  }

  EfficiencyReport rep;
  rep.method = Method::kDominance;
  if (sol.value == sum(target)) {
    rep.verdict = Verdict::kEfficient;
    DeviationSet devs = deviations(game, outcome);
    auto n = common_normal(devs);
    if (!n) {
      throw InternalInconsistency(
          "dominance: efficient verdict but no supporting weights");
    }
    check_normal(devs, *n);
    rep.weights = std::move(*n);
    return rep;
  }
  rep.verdict = Verdict::kInefficient;
  rep.dominating_outcome = outcome_from_flat(game, sol.primal);
  rep.dominating_point = induced_payoff(game, *rep.dominating_outcome);
  fill_witness_checks(game, outcome, rep);
  return rep;
}

CountingReport counting_bound(const Game& game, const Outcome& outcome) {
  if (outcome.num_states() != game.num_states() ||
      outcome.num_joint() != game.num_joint()) {
    throw std::invalid_argument("counting_bound: dimension mismatch");
  }
  CountingReport rep;
  auto sc = support_counts(outcome);
  rep.per_state = sc.per_state;
  rep.total = sc.total;
  rep.bound = game.players() + game.num_states();
  rep.passes = rep.total < rep.bound;
  for (int w = 0; w < game.num_states(); ++w) {
    if (rep.per_state[w] > game.players()) rep.statewise_violations.push_back(w);
  }
  return rep;
}

DecisionRuleReport decision_rule_check(const Game& game,
                                  const DecisionRuleProfile& profile) {
  profile.validate(game.players(), game.num_states());
  if (!profile.full_support()) {
    throw std::invalid_argument("decision_rule_check: type distribution not full support");
  }
  DecisionRuleReport rep{.induced = outcome_from_rule(game, profile)};
  const int nt = profile.num_type_profiles();

  if (const auto* jr = std::get_if<JointRule>(&profile.rule)) {
    for (int w = 0; w < game.num_states(); ++w) {
      for (int t = 1; t < nt; ++t) {
        if (jr->action[w][t] != jr->action[w][0]) {
          ++rep.changing_states;
          break;
        }
      }
    }
  } else {
    const auto& pr = std::get<PerPlayerRule>(profile.rule);
    int q = 0;
    bool any = false;
    for (const auto& own : pr.action) {
      for (std::size_t t = 1; t < own.size(); ++t) {
        if (own[t] != own[0]) {
          ++q;
          any = true;
          break;
        }
      }
    }
    rep.players_mixing = q;
    if (any) rep.changing_states = game.num_states();
    long long mult = (1LL << q) - 1;
    rep.mixing_flag = static_cast<long long>(game.num_states()) * mult >=
                  game.players();
  }
  rep.state_split_flag = rep.changing_states >= game.players();
  return rep;
}

}  // namespace effgames::efficiency
