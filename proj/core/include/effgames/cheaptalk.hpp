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

#ifndef EFFGAMES_CHEAPTALK_HPP_
#define EFFGAMES_CHEAPTALK_HPP_

#include <optional>
#include <string>
#include <vector>

#include "effgames/efficiency.hpp"
#include "effgames/persuasion.hpp"
#include "effgames/piecewise.hpp"

namespace effgames::cheaptalk {

using persuasion::SenderReceiverGame;

/// A sender strategy (state -> distribution over messages) and a receiver
/// strategy (message -> distribution over actions). The message set must
/// be at least as large as both the action and the state sets.
struct CheapTalkProfile {
  std::vector<std::string> messages;
  Mat sender;    // [state][message]
  Mat receiver;  // [message][action]

  void validate(const SenderReceiverGame& game) const;
};

struct PbeReport {
  bool is_equilibrium = false;
  /// Per state: best achievable message payoff minus the worst payoff among
  /// messages the sender actually uses; zero in equilibrium.
  Vec sender_slacks;
  /// Per message: posterior belief (on-path only) and whether every action
  /// in the receiver's mixture is a best response to it.
  std::vector<std::optional<Vec>> posteriors;
  std::vector<bool> receiver_ok;  // on-path messages only; true off path
  Outcome induced;
  Rational sender_value;  // expected payoff under the profile
};

/// Checks sender optimality in every state against all messages and
/// receiver optimality after every on-path message. Off-path messages keep
/// their prescribed mixtures and are not belief-constrained.
PbeReport verify_pbe(const SenderReceiverGame& game,
                     const CheapTalkProfile& profile, const Vec& prior);

/// Exact argmax set of the receiver's expected payoff at a belief.
std::vector<int> best_response_actions(const SenderReceiverGame& game,
                                       const Vec& belief);

struct SenderBestFeasible {
  std::vector<int> feasible_actions;  // A*: best responses under some belief
  int best_action = -1;               // a*: sender's favorite within A*
};

/// Requires a state-independent sender with pairwise distinct payoffs;
/// membership in A* is decided by an exact feasibility LP per action.
SenderBestFeasible sender_best_feasible_action(const SenderReceiverGame& game);

/// Smallest quasiconcave majorant: min of the one-sided running sups.
StepFn quasiconcave_envelope_1d(const StepFn& value);

struct EfficiencyPredicates {
  bool stochastic = false;
  bool generically_inefficient = false;  // advisory flag
  std::optional<bool> pure_favorite_efficient;
  /// a* is only guaranteed Pareto-undominated when it is the sender's
  /// globally best action; when it is not, the exact test can disagree.
  bool favorite_is_global = false;
  efficiency::EfficiencyReport cone;
};

/// Prop-2 style advisory flag plus, for state-independent senders, the
/// exact pure-a* predicate, both next to the exact cone verdict.
EfficiencyPredicates efficiency_predicates(const SenderReceiverGame& game,
                                           const CheapTalkProfile& profile,
                                           const Vec& prior);

}  // namespace effgames::cheaptalk

#endif  // EFFGAMES_CHEAPTALK_HPP_
