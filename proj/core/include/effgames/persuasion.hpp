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

#ifndef EFFGAMES_PERSUASION_HPP_
#define EFFGAMES_PERSUASION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "effgames/efficiency.hpp"
#include "effgames/game.hpp"
#include "effgames/piecewise.hpp"

namespace effgames::persuasion {

/// A two-player game in which the joint action set is the receiver's
/// action set (the sender holds a single dummy action). Payoff index 0 is
/// the sender, index 1 the receiver.
class SenderReceiverGame {
 public:
  static SenderReceiverGame make(std::vector<std::string> states, Vec prior,
                                 std::vector<std::string> receiver_actions,
                                 Mat sender_payoffs, Mat receiver_payoffs);
  /// Validates that the given game has the sender-receiver shape.
  static SenderReceiverGame from_game(Game game);

  const Game& game() const { return game_; }
  int num_states() const { return game_.num_states(); }
  int num_actions() const { return game_.num_joint(); }
  const std::vector<std::string>& action_names() const {
    return game_.actions()[1];
  }
  const Rational& sender_payoff(int state, int action) const {
    return game_.payoff(state, action, 0);
  }
  const Rational& receiver_payoff(int state, int action) const {
    return game_.payoff(state, action, 1);
  }
  bool sender_state_independent() const;
  SenderReceiverGame with_prior(Vec prior) const;

 private:
  explicit SenderReceiverGame(Game game) : game_(std::move(game)) {}
  Game game_;
};

/// An optimal direct signaling policy with its certificates: exact
/// obedience slacks and Bayes-consistent posteriors per recommendation.
struct BpSolution {
  Outcome policy;
  Rational sender_value;
  Rational receiver_value;
  /// Posterior over states for each recommended action, empty off path.
  std::vector<std::optional<Vec>> posteriors;
  /// Binding obedience pairs (recommended, deviation).
  std::vector<std::pair<int, int>> active_obedience;
};

/// Sender-optimal direct policy subject to the receiver's obedience
/// constraints; the simplex returns a vertex optimum, so receiver ties
/// break in the sender's favor automatically.
BpSolution solve_bp(const SenderReceiverGame& game, const Vec& prior);

/// The sender's value function over the one-dimensional belief space of a
/// two-state game: on each interval the receiver's best-response set is
/// constant and the sender picks his favorite action from it. The belief
/// coordinate is the probability of the second state.
struct ValueFunction {
  struct Piece {
    Rational c0, c1;            // value c0 + c1 * p on the open interval
    std::vector<int> argmax;    // receiver's best responses
    int chosen = -1;            // sender-preferred action among them
  };
  Vec breaks;
  std::vector<Piece> pieces;
  Vec point_values;
  std::vector<std::vector<int>> point_argmax;
  std::vector<int> point_chosen;

  Rational at(const Rational& p) const;
  bool piecewise_constant() const;
  StepFn to_step() const;
};

ValueFunction value_function_1d(const SenderReceiverGame& game);

/// Upper concave envelope of the value function.
PiecewiseLinear concavify_1d(const ValueFunction& v);

/// A threshold persuasion environment: one safe action, n risky actions,
/// and a receiver who takes risky action i only when the belief in state i
/// reaches T. Holds an explicit payoff realization together with the
/// derived outer points and region hyperplanes.
struct ThresholdEnv {
  int n = 0;
  Rational threshold;
  Vec sender_payoffs;  // u_S(a_1..a_n), all > 0
  SenderReceiverGame realized;
  std::vector<std::string> outer_labels;  // "w0".."wn", then "o_ij"
  Mat outer_points;                       // rows over state coordinates
  /// Hyperplanes H_0..H_n in the projected coordinates (p_1..p_n);
  /// h.x = c with the first nonzero coefficient normalized to 1.
  std::vector<std::pair<Vec, Rational>> hyperplanes;
};

ThresholdEnv build_threshold_env(int n, const Rational& threshold,
                                 const Vec& sender_payoffs);

struct RegionReport {
  std::vector<bool> in_region;         // closed membership, index 0..n
  std::vector<bool> in_region_strict;  // interior membership
  bool in_r_star = false;
  bool in_r_star_strict = false;
  Vec projection;  // q over all state coordinates, q(w0) = 0
  int i_star = -1;
  int j_star = -1;
  Rational t_p;
  bool threshold_exceeds_tp = false;
};

RegionReport region_analysis(const ThresholdEnv& env, const Vec& prior);

enum class SupportCase { kThreeInSafeState, kMixedRiskyStates, kOtherMixed };

struct ThresholdInefficiencyReport {
  bool applicable = false;  // prior interior to R_*
  RegionReport region;
  std::optional<BpSolution> bp;
  bool mixed = false;
  std::optional<efficiency::CountingReport> counting;
  std::optional<efficiency::EfficiencyReport> cone;
  std::optional<SupportCase> support_case;
};

/// Solves persuasion on the realized game and confirms the mixed-support
/// and inefficiency conclusions when the prior lies inside R_*.
ThresholdInefficiencyReport verify_threshold_inefficiency(const ThresholdEnv& env, const Vec& prior);

/// Concavification route for threshold environments: the optimal value of
/// a Bayes-plausible distribution over the outer points.
Rational outer_point_value(const ThresholdEnv& env, const Vec& prior);

}  // namespace effgames::persuasion

#endif  // EFFGAMES_PERSUASION_HPP_
