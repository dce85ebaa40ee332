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

#include "effgames/persuasion.hpp"

#include <algorithm>
#include <stdexcept>

#include "effgames/lp.hpp"

namespace effgames::persuasion {

namespace {

using effgames::efficiency::InternalInconsistency;
using lp::LinearProgram;
using lp::RowSense;

void check_interior_prior(const Vec& prior, int num_states) {
  if (static_cast<int>(prior.size()) != num_states) {
    throw std::invalid_argument("prior: wrong length");
  }
  Rational total;
  for (const auto& p : prior) {
    if (p <= Rational(0)) {
      throw std::invalid_argument("prior: must be interior");
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("prior: must sum to 1");
  }
}

std::vector<int> receiver_argmax(const SenderReceiverGame& game,
                                 const Vec& belief) {
  std::vector<int> best;
  Rational best_val;
  for (int a = 0; a < game.num_actions(); ++a) {
    Rational val;
    for (int w = 0; w < game.num_states(); ++w) {
      val += belief[w] * game.receiver_payoff(w, a);
    }
    if (best.empty() || val > best_val) {
      best = {a};
      best_val = val;
    } else if (val == best_val) {
      best.push_back(a);
    }
  }
  return best;
}

int sender_pick(const SenderReceiverGame& game, const Vec& belief,
                const std::vector<int>& candidates) {
  int pick = -1;
  Rational best;
  for (int a : candidates) {
    Rational val;
    for (int w = 0; w < game.num_states(); ++w) {
      val += belief[w] * game.sender_payoff(w, a);
    }
    if (pick < 0 || val > best) {
      pick = a;
      best = val;
    }
  }
  return pick;
}

}  // namespace

SenderReceiverGame SenderReceiverGame::make(std::vector<std::string> states,
                                            Vec prior,
                                            std::vector<std::string> actions,
                                            Mat sender_payoffs,
                                            Mat receiver_payoffs) {
  const int ns = static_cast<int>(states.size());
  const int na = static_cast<int>(actions.size());
  if (static_cast<int>(sender_payoffs.size()) != ns ||
      static_cast<int>(receiver_payoffs.size()) != ns) {
    throw std::invalid_argument("sender-receiver: payoff rows != states");
  }
  std::vector<Mat> payoffs(ns, Mat(na));
  for (int w = 0; w < ns; ++w) {
    if (static_cast<int>(sender_payoffs[w].size()) != na ||
        static_cast<int>(receiver_payoffs[w].size()) != na) {
      throw std::invalid_argument("sender-receiver: payoff row width");
    }
    for (int a = 0; a < na; ++a) {
      payoffs[w][a] = {sender_payoffs[w][a], receiver_payoffs[w][a]};
    }
  }
  Game g = Game::create(std::move(states), std::move(prior),
                        {{"s"}, std::move(actions)}, std::move(payoffs));
  return SenderReceiverGame(std::move(g));
}

SenderReceiverGame SenderReceiverGame::from_game(Game game) {
  if (game.players() != 2 || game.num_actions(0) != 1) {
    throw std::invalid_argument(
        "sender-receiver: need 2 players with a single sender action");
  }
  return SenderReceiverGame(std::move(game));
}

bool SenderReceiverGame::sender_state_independent() const {
  for (int a = 0; a < num_actions(); ++a) {
    for (int w = 1; w < num_states(); ++w) {
      if (sender_payoff(w, a) != sender_payoff(0, a)) return false;
    }
  }
  return true;
}

SenderReceiverGame SenderReceiverGame::with_prior(Vec prior) const {
  return SenderReceiverGame(game_.with_prior(std::move(prior)));
}

BpSolution solve_bp(const SenderReceiverGame& game, const Vec& prior) {
  const int ns = game.num_states();
  const int na = game.num_actions();
  check_interior_prior(prior, ns);

  const int nv = ns * na;
  auto var = [na](int w, int a) { return w * na + a; };
  LinearProgram prog = LinearProgram::maximize(Vec(nv, Rational(0)));
  for (int w = 0; w < ns; ++w) {
    for (int a = 0; a < na; ++a) {
      prog.objective[var(w, a)] = prior[w] * game.sender_payoff(w, a);
    }
  }
  for (int w = 0; w < ns; ++w) {
    Vec row(nv, Rational(0));
    for (int a = 0; a < na; ++a) row[var(w, a)] = Rational(1);
    prog.add_row(std::move(row), RowSense::kEq, Rational(1));
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < na; ++b) {
      if (a == b) continue;
      Vec row(nv, Rational(0));
      for (int w = 0; w < ns; ++w) {
        row[var(w, a)] =
            prior[w] * (game.receiver_payoff(w, a) - game.receiver_payoff(w, b));
      }
      prog.add_row(std::move(row), RowSense::kGe, Rational(0));
      pairs.emplace_back(a, b);
    }
  }
  auto sol = lp::solve(prog);
  if (!sol.optimal()) {
    throw InternalInconsistency("bp: obedience LP not optimal");
  }

  BpSolution out{.policy = Outcome::create([&] {
                   Mat rows(ns, Vec(na));
                   for (int w = 0; w < ns; ++w) {
                     for (int a = 0; a < na; ++a) {
                       rows[w][a] = sol.primal[var(w, a)];
                     }
                   }
                   return rows;
                 }()),
                 .sender_value = sol.value};
  for (int w = 0; w < ns; ++w) {
    for (int a = 0; a < na; ++a) {
      out.receiver_value +=
          prior[w] * out.policy.prob(w, a) * game.receiver_payoff(w, a);
    }
  }
  out.posteriors.assign(na, std::nullopt);
  for (int a = 0; a < na; ++a) {
    Rational mass;
    for (int w = 0; w < ns; ++w) mass += prior[w] * out.policy.prob(w, a);
    if (mass.is_zero()) continue;
    Vec q(ns);
    for (int w = 0; w < ns; ++w) {
      q[w] = prior[w] * out.policy.prob(w, a) / mass;
    }
    out.posteriors[a] = std::move(q);
  }
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    Rational slack = dot(prog.rows[ns + r], sol.primal);
    if (slack < Rational(0)) {
      throw InternalInconsistency("bp: obedience violated");
    }
    if (slack.is_zero() && out.posteriors[pairs[r].first].has_value()) {
      out.active_obedience.push_back(pairs[r]);
    }
  }
  return out;
}

Rational ValueFunction::at(const Rational& p) const {
  if (p < Rational(0) || p > Rational(1)) {
    throw std::invalid_argument("value function: argument outside [0,1]");
  }
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    if (p == breaks[i]) return point_values[i];
  }
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i] < p && p < breaks[i + 1]) {
      return pieces[i].c0 + pieces[i].c1 * p;
    }
  }
  throw std::logic_error("value function: lookup failed");
}

bool ValueFunction::piecewise_constant() const {
  for (const auto& piece : pieces) {
    if (!piece.c1.is_zero()) return false;
  }
  return true;
}

StepFn ValueFunction::to_step() const {
  if (!piecewise_constant()) {
    throw std::invalid_argument("value function: not piecewise constant");
  }
  StepFn s;
  s.breaks = breaks;
  s.point_values = point_values;
  for (const auto& piece : pieces) s.interval_values.push_back(piece.c0);
  s.validate();
  return s;
}

ValueFunction value_function_1d(const SenderReceiverGame& game) {
  if (game.num_states() != 2) {
    throw std::invalid_argument("value_function_1d: two states required");
  }
  const int na = game.num_actions();
  // Lines over p = belief in the second state.
  auto line = [&](auto&& payoff, int a) {
    Rational c0 = payoff(0, a);
    Rational c1 = payoff(1, a) - payoff(0, a);
    return std::pair<Rational, Rational>{c0, c1};
  };
  auto recv = [&](int a) {
    return line([&](int w, int x) { return game.receiver_payoff(w, x); }, a);
  };
  auto send = [&](int a) {
    return line([&](int w, int x) { return game.sender_payoff(w, x); }, a);
  };

  Vec cuts{Rational(0), Rational(1)};
  auto add_crossings = [&cuts](std::pair<Rational, Rational> f,
                               std::pair<Rational, Rational> g) {
    if (f.second == g.second) return;
    Rational x = (g.first - f.first) / (f.second - g.second);
    if (Rational(0) < x && x < Rational(1)) cuts.push_back(x);
  };
  for (int a = 0; a < na; ++a) {
    for (int b = a + 1; b < na; ++b) {
      add_crossings(recv(a), recv(b));
      add_crossings(send(a), send(b));
    }
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  auto belief = [](const Rational& p) { return Vec{Rational(1) - p, p}; };
  ValueFunction vf;
  vf.breaks = cuts;
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    Vec q = belief(cuts[i]);
    auto am = receiver_argmax(game, q);
    int chosen = sender_pick(game, q, am);
    vf.point_argmax.push_back(am);
    vf.point_chosen.push_back(chosen);
    Rational v;
    for (int w = 0; w < 2; ++w) v += q[w] * game.sender_payoff(w, chosen);
    vf.point_values.push_back(v);
    if (i + 1 < cuts.size()) {
      Rational mid = (cuts[i] + cuts[i + 1]) / Rational(2);
      Vec qm = belief(mid);
      auto ami = receiver_argmax(game, qm);
      int ci = sender_pick(game, qm, ami);
      auto [c0, c1] = send(ci);
      vf.pieces.push_back({c0, c1, ami, ci});
    }
  }
  // Merge intervals split only by irrelevant sender crossings.
  ValueFunction merged;
  merged.breaks.push_back(vf.breaks[0]);
  merged.point_values.push_back(vf.point_values[0]);
  merged.point_argmax.push_back(vf.point_argmax[0]);
  merged.point_chosen.push_back(vf.point_chosen[0]);
  for (std::size_t i = 0; i < vf.pieces.size(); ++i) {
    bool can_merge = false;
    if (!merged.pieces.empty()) {
      const auto& prev = merged.pieces.back();
      const auto& cur = vf.pieces[i];
      const auto& bp_val = vf.point_values[i];
      const auto& bp = vf.breaks[i];
      can_merge = prev.c0 == cur.c0 && prev.c1 == cur.c1 &&
                  prev.argmax == cur.argmax && prev.chosen == cur.chosen &&
                  vf.point_argmax[i] == cur.argmax &&
                  bp_val == cur.c0 + cur.c1 * bp;
    }
    if (can_merge) {
      merged.breaks.back() = vf.breaks[i + 1];
      merged.point_values.back() = vf.point_values[i + 1];
      merged.point_argmax.back() = vf.point_argmax[i + 1];
      merged.point_chosen.back() = vf.point_chosen[i + 1];
    } else {
      merged.pieces.push_back(vf.pieces[i]);
      merged.breaks.push_back(vf.breaks[i + 1]);
      merged.point_values.push_back(vf.point_values[i + 1]);
      merged.point_argmax.push_back(vf.point_argmax[i + 1]);
      merged.point_chosen.push_back(vf.point_chosen[i + 1]);
    }
  }
  return merged;
}

PiecewiseLinear concavify_1d(const ValueFunction& v) {
  if (v.breaks.size() < 2) {
    throw std::invalid_argument("concavify_1d: malformed description");
  }
  std::vector<std::pair<Rational, Rational>> corners;
  for (std::size_t i = 0; i < v.pieces.size(); ++i) {
    corners.emplace_back(v.breaks[i],
                         v.pieces[i].c0 + v.pieces[i].c1 * v.breaks[i]);
    corners.emplace_back(v.breaks[i + 1],
                         v.pieces[i].c0 + v.pieces[i].c1 * v.breaks[i + 1]);
  }
  for (std::size_t i = 0; i < v.breaks.size(); ++i) {
    corners.emplace_back(v.breaks[i], v.point_values[i]);
  }
  PiecewiseLinear cav = upper_concave_envelope(corners);
  if (!cav.is_concave()) {
    throw InternalInconsistency("concavify_1d: envelope not concave");
  }
  return cav;
}

ThresholdEnv build_threshold_env(int n, const Rational& threshold,
                                 const Vec& sender_payoffs) {
  if (n < 2) throw std::invalid_argument("threshold env: need n >= 2");
  if (!(Rational(1, 2) < threshold && threshold < Rational(1))) {
    throw std::invalid_argument("threshold env: T must lie in (1/2, 1)");
  }
  if (static_cast<int>(sender_payoffs.size()) != n) {
    throw std::invalid_argument("threshold env: one sender payoff per risky action");
  }
  for (const auto& u : sender_payoffs) {
    if (u <= Rational(0)) {
      throw std::invalid_argument("threshold env: sender payoffs must be > 0");
    }
  }
  const int ns = n + 1;
  std::vector<std::string> states, actions;
  for (int i = 0; i < ns; ++i) {
    states.push_back("w" + std::to_string(i));
    actions.push_back("a" + std::to_string(i));
  }
  Mat send(ns, Vec(ns, Rational(0))), recv(ns, Vec(ns, Rational(0)));
  for (int w = 0; w < ns; ++w) {
    for (int i = 1; i < ns; ++i) {
      send[w][i] = sender_payoffs[i - 1];
      recv[w][i] = (w == i) ? Rational(1) - threshold : -threshold;
    }
  }
  Vec uniform(ns, Rational(1, ns));
  ThresholdEnv env{.n = n,
                   .threshold = threshold,
                   .sender_payoffs = sender_payoffs,
                   .realized = SenderReceiverGame::make(
                       states, uniform, actions, send, recv)};

  // Receiver optimality at each vertex must single out the matching action.
  for (int i = 0; i < ns; ++i) {
    Vec vertex(ns, Rational(0));
    vertex[i] = Rational(1);
    auto am = receiver_argmax(env.realized, vertex);
    if (am != std::vector<int>{i}) {
      throw InternalInconsistency("threshold env: vertex best response");
    }
  }

  for (int i = 0; i < ns; ++i) {
    Vec pt(ns, Rational(0));
    pt[i] = Rational(1);
    env.outer_labels.push_back(states[i]);
    env.outer_points.push_back(pt);
  }
  for (int i = 1; i < ns; ++i) {
    for (int j = 0; j < ns; ++j) {
      if (j == i) continue;
      Vec pt(ns, Rational(0));
      pt[i] = threshold;
      pt[j] = Rational(1) - threshold;
      env.outer_labels.push_back("o_" + std::to_string(i) + "_" +
                                 std::to_string(j));
      env.outer_points.push_back(pt);
    }
  }

  // Hyperplanes in the projected coordinates (p_1..p_n): H_0 through the
  // risky-safe outer points, H_i through the origin and the o_ji.
  auto project = [n](const Vec& full) {
    return Vec(full.begin() + 1, full.begin() + 1 + n);
  };
  {
    Mat pts;
    for (int i = 1; i <= n; ++i) {
      Vec pt(ns, Rational(0));
      pt[i] = threshold;
      pt[0] = Rational(1) - threshold;
      pts.push_back(project(pt));
    }
    env.hyperplanes.push_back(lp::affine_hyperplane_through(pts));
  }
  for (int i = 1; i <= n; ++i) {
    Mat pts;
    pts.push_back(Vec(n, Rational(0)));
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Vec pt(ns, Rational(0));
      pt[j] = threshold;
      pt[i] = Rational(1) - threshold;
      pts.push_back(project(pt));
    }
    env.hyperplanes.push_back(lp::affine_hyperplane_through(pts));
  }
  return env;
}

RegionReport region_analysis(const ThresholdEnv& env, const Vec& prior) {
  const int ns = env.n + 1;
  check_interior_prior(prior, ns);
  RegionReport rep;
  Vec proj(prior.begin() + 1, prior.end());

  rep.in_region.assign(ns, false);
  rep.in_region_strict.assign(ns, false);
  for (int i = 0; i < ns; ++i) {
    const auto& [h, c] = env.hyperplanes[i];
    // Orient toward the region's defining point: w0 for H_0, w_i for H_i.
    Vec anchor(env.n, Rational(0));
    if (i > 0) anchor[i - 1] = Rational(1);
    Rational side = dot(h, anchor) - c;
    if (side.is_zero()) {
      throw InternalInconsistency("threshold env: anchor on hyperplane");
    }
    Rational val = dot(h, proj) - c;
    if (side > Rational(0)) {
      rep.in_region[i] = val >= Rational(0);
      rep.in_region_strict[i] = val > Rational(0);
    } else {
      rep.in_region[i] = val <= Rational(0);
      rep.in_region_strict[i] = val < Rational(0);
    }
  }
  for (int i = 1; i <= env.n && !rep.in_r_star; ++i) {
    for (int j = i + 1; j <= env.n; ++j) {
      if (rep.in_region[i] && rep.in_region[j] && rep.in_region[0]) {
        rep.in_r_star = true;
        break;
      }
    }
  }
  for (int i = 1; i <= env.n && !rep.in_r_star_strict; ++i) {
    for (int j = i + 1; j <= env.n; ++j) {
      if (rep.in_region_strict[i] && rep.in_region_strict[j] &&
          rep.in_region_strict[0]) {
        rep.in_r_star_strict = true;
        break;
      }
    }
  }

  rep.projection.assign(ns, Rational(0));
  Rational rest = Rational(1) - prior[0];
  for (int i = 1; i < ns; ++i) rep.projection[i] = prior[i] / rest;
  for (int i = 1; i < ns; ++i) {
    if (rep.i_star < 0 || rep.projection[i] > rep.projection[rep.i_star]) {
      rep.i_star = i;
    }
  }
  for (int i = 1; i < ns; ++i) {
    if (i == rep.i_star) continue;
    if (rep.j_star < 0 || rep.projection[i] > rep.projection[rep.j_star]) {
      rep.j_star = i;
    }
  }
  Rational tp = Rational(1) - prior[0];
  tp = std::max(tp, Rational(1) - rep.projection[rep.i_star]);
  tp = std::max(tp, Rational(1) - rep.projection[rep.j_star]);
  rep.t_p = tp;
  rep.threshold_exceeds_tp = env.threshold > tp;
  if (rep.threshold_exceeds_tp != rep.in_r_star_strict) {
    throw InternalInconsistency("threshold env: T_p and region tests disagree");
  }
  return rep;
}

ThresholdInefficiencyReport verify_threshold_inefficiency(const ThresholdEnv& env, const Vec& prior) {
  ThresholdInefficiencyReport rep{.region = region_analysis(env, prior)};
  rep.applicable = rep.region.in_r_star_strict;
  if (!rep.applicable) return rep;

  rep.bp = solve_bp(env.realized, prior);
  const Outcome& mu = rep.bp->policy;
  Game embedded = env.realized.game().with_prior(prior);
  rep.counting = efficiency::counting_bound(embedded, mu);
  rep.cone = efficiency::ex_ante_efficient_cone(embedded, mu);

  auto sc = support_counts(mu);
  rep.mixed = false;
  for (int s : sc.per_state) {
    if (s >= 2) rep.mixed = true;
  }
  if (sc.per_state[0] >= 3) {
    rep.support_case = SupportCase::kThreeInSafeState;
  } else {
    int risky_mixed = 0;
    for (std::size_t w = 1; w < sc.per_state.size(); ++w) {
      if (sc.per_state[w] >= 2) ++risky_mixed;
    }
    rep.support_case = risky_mixed >= 2 ? SupportCase::kMixedRiskyStates
                                        : SupportCase::kOtherMixed;
  }
  return rep;
}

Rational outer_point_value(const ThresholdEnv& env, const Vec& prior) {
  const int ns = env.n + 1;
  check_interior_prior(prior, ns);
  const int nq = static_cast<int>(env.outer_points.size());
  LinearProgram prog = LinearProgram::maximize(Vec(nq, Rational(0)));
  for (int q = 0; q < nq; ++q) {
    const Vec& belief = env.outer_points[q];
    auto am = receiver_argmax(env.realized, belief);
    int chosen = sender_pick(env.realized, belief, am);
    Rational v;
    for (int w = 0; w < ns; ++w) {
      v += belief[w] * env.realized.sender_payoff(w, chosen);
    }
    prog.objective[q] = v;
  }
  for (int w = 0; w < ns; ++w) {
    Vec row(nq);
    for (int q = 0; q < nq; ++q) row[q] = env.outer_points[q][w];
    prog.add_row(std::move(row), RowSense::kEq, prior[w]);
  }
  auto sol = lp::solve(prog);
  if (!sol.optimal()) {
    throw InternalInconsistency("outer points: splitting LP not optimal");
  }
  return sol.value;
}

}  // namespace effgames::persuasion
