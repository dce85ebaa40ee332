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

#include "effgames/game.hpp"

#include <set>
#include <stdexcept>

namespace effgames {

namespace {

void require_unique(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen(names.begin(), names.end());
  if (seen.size() != names.size()) {
    throw std::invalid_argument(std::string("game: duplicate ") + what);
  }
}

}  // namespace

Game Game::create(std::vector<std::string> states, Vec prior,
                  std::vector<std::vector<std::string>> actions,
                  std::vector<Mat> payoffs) {
  Game g;
  g.players_ = static_cast<int>(actions.size());
  if (g.players_ < 2) throw std::invalid_argument("game: need >= 2 players");
  if (states.empty()) throw std::invalid_argument("game: no states");
  if (states.size() != prior.size()) {
    throw std::invalid_argument("game: prior length != state count");
  }
  Rational total;
  for (const auto& p : prior) {
    if (p <= Rational(0)) {
      throw std::invalid_argument("game: prior must be strictly positive");
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("game: prior must sum to exactly 1");
  }
  require_unique(states, "state names");
  g.num_joint_ = 1;
  for (const auto& as : actions) {
    if (as.empty()) throw std::invalid_argument("game: empty action set");
    require_unique(as, "action names");
    g.num_joint_ *= static_cast<int>(as.size());
  }
  if (payoffs.size() != states.size()) {
    throw std::invalid_argument("game: payoff tensor missing states");
  }
  for (const auto& per_state : payoffs) {
    if (static_cast<int>(per_state.size()) != g.num_joint_) {
      throw std::invalid_argument("game: payoff tensor not total");
    }
    for (const auto& v : per_state) {
      if (static_cast<int>(v.size()) != g.players_) {
        throw std::invalid_argument("game: payoff vector length != players");
      }
    }
  }
  g.states_ = std::move(states);
  g.prior_ = std::move(prior);
  g.actions_ = std::move(actions);
  g.payoffs_ = std::move(payoffs);
  return g;
}

std::vector<int> Game::joint_to_profile(int a) const {
  std::vector<int> profile(players_);
  for (int i = players_ - 1; i >= 0; --i) {
    int sz = num_actions(i);
    profile[i] = a % sz;
    a /= sz;
  }
  return profile;
}

int Game::profile_to_joint(const std::vector<int>& profile) const {
  if (static_cast<int>(profile.size()) != players_) {
    throw std::invalid_argument("game: profile length mismatch");
  }
  int a = 0;
  for (int i = 0; i < players_; ++i) {
    if (profile[i] < 0 || profile[i] >= num_actions(i)) {
      throw std::invalid_argument("game: action index out of range");
    }
    a = a * num_actions(i) + profile[i];
  }
  return a;
}

std::string Game::joint_label(int a) const {
  auto profile = joint_to_profile(a);
  std::string label;
  for (int i = 0; i < players_; ++i) {
    if (i > 0) label += ",";
    label += actions_[i][profile[i]];
  }
  return label;
}

std::optional<int> Game::find_state(const std::string& name) const {
  for (int w = 0; w < num_states(); ++w) {
    if (states_[w] == name) return w;
  }
  return std::nullopt;
}

std::optional<int> Game::find_joint_label(const std::string& label) const {
  for (int a = 0; a < num_joint_; ++a) {
    if (joint_label(a) == label) return a;
  }
  return std::nullopt;
}

Game Game::with_prior(Vec prior) const {
  return create(states_, std::move(prior), actions_, payoffs_);
}

Outcome Outcome::create(Mat rows) {
  if (rows.empty()) throw std::invalid_argument("outcome: no states");
  const std::size_t width = rows[0].size();
  for (const auto& row : rows) {
    if (row.size() != width || width == 0) {
      throw std::invalid_argument("outcome: ragged rows");
    }
    Rational total;
    for (const auto& p : row) {
      if (p < Rational(0)) {
        throw std::invalid_argument("outcome: negative probability");
      }
      total += p;
    }
    if (total != Rational(1)) {
      throw std::invalid_argument("outcome: row must sum to exactly 1");
    }
  }
  return Outcome(std::move(rows));
}

Outcome Outcome::pure(int num_states, int num_joint,
                      const std::vector<int>& action_per_state) {
  if (static_cast<int>(action_per_state.size()) != num_states) {
    throw std::invalid_argument("outcome: one action per state required");
  }
  Mat rows(num_states, Vec(num_joint, Rational(0)));
  for (int w = 0; w < num_states; ++w) {
    rows[w].at(action_per_state[w]) = Rational(1);
  }
  return create(std::move(rows));
}

std::vector<int> Outcome::support(int w) const {
  std::vector<int> s;
  for (int a = 0; a < num_joint(); ++a) {
    if (rows_[w][a] > Rational(0)) s.push_back(a);
  }
  return s;
}

int DecisionRuleProfile::num_type_profiles() const {
  int n = 1;
  for (const auto& ts : type_sets) n *= static_cast<int>(ts.size());
  return n;
}

std::vector<int> DecisionRuleProfile::profile_of(int t) const {
  std::vector<int> profile(type_sets.size());
  for (int i = static_cast<int>(type_sets.size()) - 1; i >= 0; --i) {
    int sz = static_cast<int>(type_sets[i].size());
    profile[i] = t % sz;
    t /= sz;
  }
  return profile;
}

bool DecisionRuleProfile::full_support() const {
  for (const auto& row : type_dist) {
    for (const auto& p : row) {
      if (p <= Rational(0)) return false;
    }
  }
  return true;
}

void DecisionRuleProfile::validate(int players, int num_states) const {
  if (static_cast<int>(type_sets.size()) != players) {
    throw std::invalid_argument("rule: one type set per player required");
  }
  const int nt = num_type_profiles();
  if (static_cast<int>(type_dist.size()) != num_states) {
    throw std::invalid_argument("rule: type distribution misses states");
  }
  for (const auto& row : type_dist) {
    if (static_cast<int>(row.size()) != nt) {
      throw std::invalid_argument("rule: type distribution width mismatch");
    }
    Rational total;
    for (const auto& p : row) {
      if (p < Rational(0)) {
        throw std::invalid_argument("rule: negative type probability");
      }
      total += p;
    }
    if (total != Rational(1)) {
      throw std::invalid_argument("rule: type rows must sum to 1");
    }
  }
}

PayoffVector induced_payoff(const Game& game, const Outcome& outcome) {
  if (outcome.num_states() != game.num_states() ||
      outcome.num_joint() != game.num_joint()) {
    throw std::invalid_argument("induced_payoff: dimension mismatch");
  }
  Vec u(game.players(), Rational(0));
  for (int w = 0; w < game.num_states(); ++w) {
    for (int a = 0; a < game.num_joint(); ++a) {
      const Rational& p = outcome.prob(w, a);
      if (p.is_zero()) continue;
      Rational weight = game.prior(w) * p;
      for (int i = 0; i < game.players(); ++i) {
        u[i] += weight * game.payoff(w, a, i);
      }
    }
  }
  return u;
}

PayoffVector state_payoff(const Game& game, const Outcome& outcome,
                          int state) {
  if (outcome.num_states() != game.num_states() ||
      outcome.num_joint() != game.num_joint()) {
    throw std::invalid_argument("state_payoff: dimension mismatch");
  }
  if (state < 0 || state >= game.num_states()) {
    throw std::invalid_argument("state_payoff: unknown state");
  }
  Vec u(game.players(), Rational(0));
  for (int a = 0; a < game.num_joint(); ++a) {
    const Rational& p = outcome.prob(state, a);
    if (p.is_zero()) continue;
    for (int i = 0; i < game.players(); ++i) {
      u[i] += p * game.payoff(state, a, i);
    }
  }
  return u;
}

SupportCounts support_counts(const Outcome& outcome) {
  SupportCounts sc;
  for (int w = 0; w < outcome.num_states(); ++w) {
    int n = static_cast<int>(outcome.support(w).size());
    sc.per_state.push_back(n);
    sc.total += n;
  }
  return sc;
}

Outcome outcome_from_rule(const Game& game,
                          const DecisionRuleProfile& profile) {
  profile.validate(game.players(), game.num_states());
  const int nt = profile.num_type_profiles();
  Mat rows(game.num_states(), Vec(game.num_joint(), Rational(0)));
  for (int w = 0; w < game.num_states(); ++w) {
    for (int t = 0; t < nt; ++t) {
      const Rational& mass = profile.type_dist[w][t];
      if (mass.is_zero()) continue;
      int joint;
      if (const auto* jr = std::get_if<JointRule>(&profile.rule)) {
        if (static_cast<int>(jr->action.size()) != game.num_states() ||
            static_cast<int>(jr->action[w].size()) != nt) {
          throw std::invalid_argument("rule: joint rule dimension mismatch");
        }
        joint = jr->action[w][t];
        if (joint < 0 || joint >= game.num_joint()) {
          throw std::invalid_argument("rule: unknown joint action");
        }
      } else {
        const auto& pr = std::get<PerPlayerRule>(profile.rule);
        if (static_cast<int>(pr.action.size()) != game.players()) {
          throw std::invalid_argument("rule: one rule per player required");
        }
        auto types = profile.profile_of(t);
        std::vector<int> acts(game.players());
        for (int i = 0; i < game.players(); ++i) {
          if (types[i] >= static_cast<int>(pr.action[i].size())) {
            throw std::invalid_argument("rule: unknown type");
          }
          acts[i] = pr.action[i][types[i]];
        }
        joint = game.profile_to_joint(acts);
      }
      rows[w][joint] += mass;
    }
  }
  return Outcome::create(std::move(rows));
}

}  // namespace effgames
