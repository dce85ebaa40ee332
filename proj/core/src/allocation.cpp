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

#include "effgames/allocation.hpp"

#include <algorithm>
#include <stdexcept>

namespace effgames::allocation {

AllocationInstance AllocationInstance::create(
    std::vector<std::vector<std::string>> type_sets, Vec prior, Mat values,
    Rational t) {
  AllocationInstance inst;
  if (type_sets.size() < 2) {
    throw std::invalid_argument("allocation: need at least 2 agents");
  }
  int ns = 1;
  for (const auto& ts : type_sets) {
    if (ts.size() < 2) {
      throw std::invalid_argument("allocation: each agent needs >= 2 types");
    }
    ns *= static_cast<int>(ts.size());
  }
  if (static_cast<int>(prior.size()) != ns) {
    throw std::invalid_argument("allocation: prior length mismatch");
  }
  Rational total;
  for (const auto& p : prior) {
    if (p <= Rational(0)) {
      throw std::invalid_argument("allocation: prior must have full support");
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument("allocation: prior must sum to 1");
  }
  if (static_cast<int>(values.size()) != ns) {
    throw std::invalid_argument("allocation: values rows mismatch");
  }
  for (const auto& row : values) {
    if (row.size() != type_sets.size()) {
      throw std::invalid_argument("allocation: values width mismatch");
    }
    for (const auto& v : row) {
      if (v < Rational(-1) || v > Rational(1)) {
        throw std::invalid_argument("allocation: values must lie in [-1, 1]");
      }
    }
  }
  if (t <= Rational(0) || t > Rational(1)) {
    throw std::invalid_argument("allocation: t must lie in (0, 1]");
  }
  inst.type_sets_ = std::move(type_sets);
  inst.prior_ = std::move(prior);
  inst.values_ = std::move(values);
  inst.t_ = std::move(t);
  return inst;
}

std::vector<int> AllocationInstance::state_to_profile(int state) const {
  std::vector<int> profile(agents());
  for (int i = agents() - 1; i >= 0; --i) {
    profile[i] = state % num_types(i);
    state /= num_types(i);
  }
  return profile;
}

int AllocationInstance::profile_to_state(
    const std::vector<int>& profile) const {
  int s = 0;
  for (int i = 0; i < agents(); ++i) s = s * num_types(i) + profile[i];
  return s;
}

int AllocationInstance::others_index(int agent, int state) const {
  auto profile = state_to_profile(state);
  int idx = 0;
  for (int i = 0; i < agents(); ++i) {
    if (i == agent) continue;
    idx = idx * num_types(i) + profile[i];
  }
  return idx;
}

int AllocationInstance::num_others(int agent) const {
  int n = 1;
  for (int i = 0; i < agents(); ++i) {
    if (i != agent) n *= num_types(i);
  }
  return n;
}

int AllocationInstance::with_own_type(int agent, int state,
                                      int own_type) const {
  auto profile = state_to_profile(state);
  profile[agent] = own_type;
  return profile_to_state(profile);
}

std::string AllocationInstance::state_label(int state) const {
  auto profile = state_to_profile(state);
  std::string label;
  for (int i = 0; i < agents(); ++i) {
    if (i > 0) label += ",";
    label += type_sets_[i][profile[i]];
  }
  return label;
}

AllocationInstance AllocationInstance::with_values(Mat values) const {
  return create(type_sets_, prior_, std::move(values), t_);
}

Mat peer_values(const AllocationInstance& instance) {
  const int na = instance.agents();
  const int ns = instance.num_states();
  Mat out(ns, Vec(na, Rational(0)));
  for (int i = 0; i < na; ++i) {
    // Condition on the opponents' profile: average over the agent's types.
    std::vector<Rational> mass(instance.num_others(i), Rational(0));
    std::vector<Rational> acc(instance.num_others(i), Rational(0));
    for (int s = 0; s < ns; ++s) {
      int o = instance.others_index(i, s);
      mass[o] += instance.prior()[s];
      acc[o] += instance.prior()[s] * instance.value(s, i);
    }
    for (int s = 0; s < ns; ++s) {
      int o = instance.others_index(i, s);
      out[s][i] = acc[o] / mass[o];
    }
  }
  return out;
}

RankTables ranks_and_robust_ranks(const AllocationInstance& instance) {
  const int na = instance.agents();
  const int ns = instance.num_states();
  Mat pv = peer_values(instance);
  RankTables rt;
  rt.ranks.assign(ns, Vec(na, Rational(0)));
  for (int s = 0; s < ns; ++s) {
    std::vector<int> order(na);
    for (int i = 0; i < na; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (pv[s][a] != pv[s][b]) return pv[s][a] > pv[s][b];
      return a < b;
    });
    for (int pos = 0; pos < na; ++pos) {
      rt.ranks[s][order[pos]] = Rational(pos + 1, na);
    }
  }
  rt.robust_ranks.assign(ns, Vec(na, Rational(0)));
  for (int s = 0; s < ns; ++s) {
    for (int i = 0; i < na; ++i) {
      Rational worst = rt.ranks[s][i];
      for (int ti = 0; ti < instance.num_types(i); ++ti) {
        worst = std::max(worst,
                         rt.ranks[instance.with_own_type(i, s, ti)][i]);
      }
      rt.robust_ranks[s][i] = worst;
    }
  }
  return rt;
}

Vec informational_size(const AllocationInstance& instance) {
  const int na = instance.agents();
  const int ns = instance.num_states();
  auto rt = ranks_and_robust_ranks(instance);
  Vec delta(ns, Rational(0));
  for (int s = 0; s < ns; ++s) {
    for (int i = 0; i < na; ++i) {
      for (int ti = 0; ti < instance.num_types(i); ++ti) {
        Rational shift =
            (rt.ranks[s][i] - rt.ranks[instance.with_own_type(i, s, ti)][i])
                .abs();
        delta[s] = std::max(delta[s], shift);
      }
    }
  }
  return delta;
}

MechanismOutcome run_mechanism(const AllocationInstance& instance,
                               SelectionRule rule) {
  const int na = instance.agents();
  const int ns = instance.num_states();
  MechanismDiagnostics diag;
  diag.peer_values = peer_values(instance);
  auto rt = ranks_and_robust_ranks(instance);
  diag.ranks = rt.ranks;
  diag.robust_ranks = rt.robust_ranks;
  diag.informational_size = informational_size(instance);
  diag.eligible.assign(ns, std::vector<bool>(na, false));
  diag.selected.assign(ns, {});

  Mat rows(ns, Vec(na + 1, Rational(0)));
  for (int s = 0; s < ns; ++s) {
    for (int i = 0; i < na; ++i) {
      if (rt.ranks[s][i] <= instance.t()) diag.selected[s].push_back(i);
      diag.eligible[s][i] = rt.robust_ranks[s][i] <= instance.t() &&
                            diag.peer_values[s][i] >= Rational(0);
    }
    const int chosen = static_cast<int>(diag.selected[s].size());
    Rational each;
    if (chosen > 0) {
      each = rule == SelectionRule::kUniformOverSelected
                 ? Rational(1, chosen)
                 : Rational(1) / (instance.t() * Rational(na));
    }
    Rational kept(1);
    for (int i : diag.selected[s]) {
      if (diag.eligible[s][i]) {
        rows[s][i + 1] = each;
        kept -= each;
      }
    }
    rows[s][0] = kept;
  }
  return MechanismOutcome{Outcome::create(std::move(rows)), std::move(diag)};
}

DicReport verify_dic(const AllocationInstance& instance,
                     const Outcome& outcome) {
  if (outcome.num_states() != instance.num_states() ||
      outcome.num_joint() != instance.players()) {
    throw std::invalid_argument("verify_dic: dimension mismatch");
  }
  DicReport rep;
  for (int i = 0; i < instance.agents(); ++i) {
    for (int s = 0; s < instance.num_states(); ++s) {
      for (int ti = 0; ti < instance.num_types(i); ++ti) {
        int dev = instance.with_own_type(i, s, ti);
        if (dev == s) continue;
        if (outcome.prob(s, i + 1) < outcome.prob(dev, i + 1)) {
          rep.holds = false;
          rep.violations.push_back({i, s, ti, outcome.prob(s, i + 1),
                                    outcome.prob(dev, i + 1)});
        }
      }
    }
  }
  return rep;
}

Game embed_as_game(const AllocationInstance& instance) {
  const int k = instance.players();
  const int ns = instance.num_states();
  std::vector<std::string> states;
  for (int s = 0; s < ns; ++s) states.push_back(instance.state_label(s));
  std::vector<std::vector<std::string>> actions(k);
  for (int a = 0; a <= instance.agents(); ++a) {
    actions[0].push_back("a" + std::to_string(a));
  }
  for (int i = 1; i < k; ++i) actions[i] = {"-"};
  std::vector<Mat> payoffs(ns, Mat(k, Vec(k, Rational(0))));
  for (int s = 0; s < ns; ++s) {
    for (int a = 0; a < k; ++a) {
      Vec u(k, Rational(0));
      if (a > 0) {
        u[0] = instance.value(s, a - 1);
        u[a] = Rational(1);
      }
      payoffs[s][a] = std::move(u);
    }
  }
  return Game::create(std::move(states), instance.prior(), std::move(actions),
                      std::move(payoffs));
}

InefficiencyReport inefficiency_verdict(const AllocationInstance& instance,
                          const MechanismOutcome& outcome, const Game& game) {
  InefficiencyReport rep;
  const int na = instance.agents();
  Vec delta = outcome.diagnostics.informational_size;
  Rational two_over(2, na);
  rep.assumptions_hold = true;
  for (int s = 0; s < instance.num_states(); ++s) {
    Rational need = std::max(Rational(1, na) + delta[s], two_over);
    if (instance.t() < need) {
      rep.assumptions_hold = false;
      rep.assumption_failures.push_back(
          "threshold below 1/(k-1) + delta or 2/(k-1) at state " +
          instance.state_label(s));
    }
    bool some_nonnegative = false;
    for (int i = 0; i < na; ++i) {
      if (outcome.diagnostics.peer_values[s][i] >= Rational(0)) {
        some_nonnegative = true;
      }
    }
    if (!some_nonnegative) {
      rep.assumptions_hold = false;
      rep.assumption_failures.push_back(
          "no agent with non-negative peer value at state " +
          instance.state_label(s));
    }
  }
  if (!rep.assumptions_hold) return rep;

  rep.counting = efficiency::counting_bound(game, outcome.outcome);
  rep.all_states_randomize = true;
  for (int s : rep.counting->per_state) {
    if (s < 2) rep.all_states_randomize = false;
  }
  rep.cone = efficiency::ex_ante_efficient_cone(game, outcome.outcome);
  return rep;
}

}  // namespace effgames::allocation
