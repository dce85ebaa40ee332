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

#ifndef EFFGAMES_GAME_HPP_
#define EFFGAMES_GAME_HPP_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "effgames/rational.hpp"

namespace effgames {

/// A finite game with incomplete information: k >= 2 players, a finite
/// state set with an interior common prior, per-player action lists, and a
/// total payoff tensor (state, joint action) -> k payoffs. Joint actions
/// are indexed in row-major order over the per-player lists; all tensors
/// use that order. Immutable after construction.
class Game {
 public:
  static Game create(std::vector<std::string> states, Vec prior,
                     std::vector<std::vector<std::string>> actions,
                     std::vector<Mat> payoffs);

  int players() const { return players_; }
  int num_states() const { return static_cast<int>(states_.size()); }
  int num_joint() const { return num_joint_; }
  const std::vector<std::string>& states() const { return states_; }
  const Vec& prior() const { return prior_; }
  const Rational& prior(int w) const { return prior_[w]; }
  const std::vector<std::vector<std::string>>& actions() const {
    return actions_;
  }
  int num_actions(int player) const {
    return static_cast<int>(actions_[player].size());
  }
  /// Payoff vector (one entry per player) for state w and joint action a.
  const Vec& payoff(int w, int a) const { return payoffs_[w][a]; }
  const Rational& payoff(int w, int a, int player) const {
    return payoffs_[w][a][player];
  }

  std::vector<int> joint_to_profile(int a) const;
  int profile_to_joint(const std::vector<int>& profile) const;
  std::string joint_label(int a) const;
  std::optional<int> find_state(const std::string& name) const;
  std::optional<int> find_joint_label(const std::string& label) const;

  /// Same game under a different (interior) prior.
  Game with_prior(Vec prior) const;

 private:
  Game() = default;
  int players_ = 0;
  int num_joint_ = 0;
  std::vector<std::string> states_;
  Vec prior_;
  std::vector<std::vector<std::string>> actions_;
  std::vector<Mat> payoffs_;  // [state][joint][player]
};

/// A map from states to exact distributions over joint actions. Rows are
/// validated on construction: entries >= 0 and each row sums to exactly 1.
class Outcome {
 public:
  static Outcome create(Mat rows);
  /// Deterministic outcome: one joint action per state.
  static Outcome pure(int num_states, int num_joint,
                      const std::vector<int>& action_per_state);

  int num_states() const { return static_cast<int>(rows_.size()); }
  int num_joint() const {
    return rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  }
  const Mat& rows() const { return rows_; }
  const Vec& row(int w) const { return rows_[w]; }
  const Rational& prob(int w, int a) const { return rows_[w][a]; }
  std::vector<int> support(int w) const;

 private:
  explicit Outcome(Mat rows) : rows_(std::move(rows)) {}
  Mat rows_;
};

struct SupportCounts {
  std::vector<int> per_state;
  int total = 0;
};

/// Joint pure decision rule sigma(t, w) -> joint action, indexed
/// [state][type profile index].
struct JointRule {
  std::vector<std::vector<int>> action;
};

/// Per-player pure rules sigma_i: T_i -> A_i (state-independent).
struct PerPlayerRule {
  std::vector<std::vector<int>> action;  // [player][own type] -> own action
};

/// Type sets, a per-state distribution over type profiles, and a pure
/// decision rule in one of the two supported shapes.
struct DecisionRuleProfile {
  std::vector<std::vector<std::string>> type_sets;  // per player
  Mat type_dist;  // [state][type profile index], row-major over type sets
  std::variant<JointRule, PerPlayerRule> rule;

  int num_type_profiles() const;
  std::vector<int> profile_of(int t) const;
  bool full_support() const;
  void validate(int players, int num_states) const;
};

using PayoffVector = Vec;

/// Expected payoff vector of an outcome under the game's prior.
PayoffVector induced_payoff(const Game& game, const Outcome& outcome);

/// State-contingent payoff vector of an outcome.
PayoffVector state_payoff(const Game& game, const Outcome& outcome,
                          int state);

/// Per-state support sizes and their total.
SupportCounts support_counts(const Outcome& outcome);

/// The outcome induced by a type-contingent decision rule: for each state,
/// the pushforward of the type distribution through the rule.
Outcome outcome_from_rule(const Game& game,
                          const DecisionRuleProfile& profile);

}  // namespace effgames

#endif  // EFFGAMES_GAME_HPP_
