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

#ifndef EFFGAMES_EFFICIENCY_HPP_
#define EFFGAMES_EFFICIENCY_HPP_

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "effgames/game.hpp"

namespace effgames::efficiency {

/// Raised when the two sides of a theorem-of-the-alternative both succeed
/// or both fail, or when two certified routes disagree. Always a bug or a
/// broken input, never a normal verdict.
struct InternalInconsistency : std::logic_error {
  using std::logic_error::logic_error;
};

/// One payoff-change vector from replacing the prescribed play in a state
/// with a pure joint action.
struct Deviation {
  int state;
  int joint;
  Vec delta;  // u(state, joint) - u(outcome | state), one entry per player
};

struct DeviationSet {
  std::vector<Deviation> items;
  int players = 0;
};

struct CountingReport {
  std::vector<int> per_state;
  int total = 0;
  int bound = 0;  // players + states
  bool passes = false;
  std::vector<int> statewise_violations;  // states with support > players
};

enum class Verdict { kEfficient, kInefficient };
enum class Method { kCone, kDominance };

/// Either a strictly positive weight vector supporting every state, or a
/// Pareto-improving witness. Verified on construction: an efficient report
/// carries n >= 1 with n.d <= 0 for every deviation; an inefficient one
/// carries a feasible dominating point v >= u(mu), v != u(mu).
struct EfficiencyReport {
  Verdict verdict;
  Method method;
  Vec weights;  // efficient: every component >= 1
  std::map<std::pair<int, int>, Rational> lambda;  // cone witness, by (w, a)
  Vec dominating_point;
  std::optional<Outcome> dominating_outcome;
  bool weakly_efficient = false;  // dominated, but never uniformly
  bool efficient() const { return verdict == Verdict::kEfficient; }
};

struct StateEfficiencyReport {
  bool efficient = false;
  Vec weights;            // efficient: supporting n >= 1 for this state
  Vec dominating_point;   // inefficient: point of F_state dominating u(mu|w)
  Vec dominating_mix;     // the distribution over joint actions behind it
};

struct DecisionRuleReport {
  int changing_states = 0;    // states where the joint rule splits types
  bool state_split_flag = false;        // changing_states >= players
  std::optional<int> players_mixing;  // per-player rules: q
  bool mixing_flag = false;       // |states| * (2^q - 1) >= players
  Outcome induced;
};

/// All |states| x |joint| deviation vectors of an outcome.
DeviationSet deviations(const Game& game, const Outcome& outcome);

/// Ex-post test in one state: no point of the state's feasible payoff set
/// weakly dominates u(mu|state) with a strict coordinate. Decided by LP.
StateEfficiencyReport ex_post_efficient(const Game& game,
                                        const Outcome& outcome, int state);

/// Deviation-cone test: inefficient iff some nonnegative combination of
/// deviations is >= 0 and nonzero; otherwise a common strictly positive
/// weight vector exists. Both sides are solved and must exclude each other.
EfficiencyReport ex_ante_efficient_cone(const Game& game,
                                        const Outcome& outcome);

/// Direct dominance test: maximize the total improvement of a feasible
/// payoff point over u(mu) subject to componentwise >=.
EfficiencyReport ex_ante_efficient_dominance(const Game& game,
                                             const Outcome& outcome);

/// Support-size bound: total support strictly below players + states is
/// necessary for efficiency generically. Advisory, never a verdict.
CountingReport counting_bound(const Game& game, const Outcome& outcome);

/// Conditions (i)/(ii) for generic inefficiency of rule-induced outcomes,
/// plus the induced outcome itself for direct testing.
DecisionRuleReport decision_rule_check(const Game& game,
                                  const DecisionRuleProfile& profile);

}  // namespace effgames::efficiency

#endif  // EFFGAMES_EFFICIENCY_HPP_
