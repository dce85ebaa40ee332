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

#ifndef EFFGAMES_ALLOCATION_HPP_
#define EFFGAMES_ALLOCATION_HPP_

#include <optional>
#include <string>
#include <vector>

#include "effgames/efficiency.hpp"
#include "effgames/game.hpp"

namespace effgames::allocation {

/// A good-allocation problem with peer information: agents with private
/// types, a full-support prior over type profiles, bounded principal
/// values, and a selection threshold t in (0, 1].
class AllocationInstance {
 public:
  static AllocationInstance create(
      std::vector<std::vector<std::string>> type_sets, Vec prior, Mat values,
      Rational t);

  int agents() const { return static_cast<int>(type_sets_.size()); }
  int players() const { return agents() + 1; }  // principal + agents
  int num_states() const { return static_cast<int>(prior_.size()); }
  const std::vector<std::vector<std::string>>& type_sets() const {
    return type_sets_;
  }
  const Vec& prior() const { return prior_; }
  const Rational& value(int state, int agent) const {
    return values_[state][agent];
  }
  const Rational& t() const { return t_; }

  int num_types(int agent) const {
    return static_cast<int>(type_sets_[agent].size());
  }
  std::vector<int> state_to_profile(int state) const;
  int profile_to_state(const std::vector<int>& profile) const;
  /// Index over opponents' type profiles for one agent (row-major with the
  /// agent's own coordinate removed).
  int others_index(int agent, int state) const;
  int num_others(int agent) const;
  /// State reached from `state` when `agent` reports `own_type` instead.
  int with_own_type(int agent, int state, int own_type) const;
  std::string state_label(int state) const;
  AllocationInstance with_values(Mat values) const;

 private:
  AllocationInstance() = default;
  std::vector<std::vector<std::string>> type_sets_;
  Vec prior_;
  Mat values_;  // [state][agent]
  Rational t_;
};

/// How ties between the mechanism's selection cap and the selected-set
/// size are resolved: uniform over the selected set, or the literal
/// 1/(t(k-1)) per selected agent with the remainder kept.
enum class SelectionRule { kUniformOverSelected, kCapped };

struct MechanismDiagnostics {
  Mat peer_values;    // [state][agent], conditional expectations
  Mat ranks;          // [state][agent], normalized positions
  Mat robust_ranks;   // [state][agent], max over the agent's own types
  std::vector<std::vector<bool>> eligible;  // [state][agent]
  Vec informational_size;                   // delta per state
  std::vector<std::vector<int>> selected;   // [state] -> agent list
};

struct MechanismOutcome {
  Outcome outcome;  // over actions a_0 (keep), a_1..a_{k-1}
  MechanismDiagnostics diagnostics;
};

struct DicViolation {
  int agent;
  int state;
  int misreport;  // own type reported instead
  Rational truthful;
  Rational deviating;
};

struct DicReport {
  bool holds = true;
  std::vector<DicViolation> violations;
};

struct InefficiencyReport {
  bool assumptions_hold = false;
  std::vector<std::string> assumption_failures;
  std::optional<efficiency::CountingReport> counting;
  std::optional<efficiency::EfficiencyReport> cone;
  bool all_states_randomize = false;  // |support| >= 2 in every state
};

/// Conditional expectation of each agent's principal value given the
/// opponents' types.
Mat peer_values(const AllocationInstance& instance);

struct RankTables {
  Mat ranks;
  Mat robust_ranks;
};

/// Normalized descending ranks of the peer values at each state (ties to
/// the lower agent index) and their robust (worst own-report) versions.
RankTables ranks_and_robust_ranks(const AllocationInstance& instance);

/// Largest rank shift any agent can cause at each state by misreporting.
Vec informational_size(const AllocationInstance& instance);

/// Runs the ranking-based mechanism: select uniformly among the top ranks,
/// allocate if the robust rank stays under the threshold and the peer
/// value is non-negative, return all diagnostics.
MechanismOutcome run_mechanism(
    const AllocationInstance& instance,
    SelectionRule rule = SelectionRule::kUniformOverSelected);

/// Exhaustive dominant-strategy incentive check of any mechanism outcome.
DicReport verify_dic(const AllocationInstance& instance,
                     const Outcome& outcome);

/// The k-player game embedding: the principal earns the value of the
/// chosen agent, each agent earns 1 exactly when selected.
Game embed_as_game(const AllocationInstance& instance);

/// Checks the threshold/peer-value assumptions, the counting bound, and
/// the exact cone verdict on the embedded game.
InefficiencyReport inefficiency_verdict(const AllocationInstance& instance,
                          const MechanismOutcome& outcome, const Game& game);

}  // namespace effgames::allocation

#endif  // EFFGAMES_ALLOCATION_HPP_
