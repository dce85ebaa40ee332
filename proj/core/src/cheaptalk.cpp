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

#include "effgames/cheaptalk.hpp"

#include <algorithm>
#include <stdexcept>

#include "effgames/lp.hpp"

namespace effgames::cheaptalk {

namespace {

using lp::LinearProgram;
using lp::RowSense;

void check_distribution(const Vec& row, const char* what) {
  Rational total;
  for (const auto& p : row) {
    if (p < Rational(0)) {
      throw std::invalid_argument(std::string(what) + ": negative probability");
    }
    total += p;
  }
  if (total != Rational(1)) {
    throw std::invalid_argument(std::string(what) + ": must sum to 1");
  }
}

void check_prior(const Vec& prior, int num_states) {
  if (static_cast<int>(prior.size()) != num_states) {
    throw std::invalid_argument("prior: wrong length");
  }
  for (const auto& p : prior) {
    if (p <= Rational(0)) {
      throw std::invalid_argument("prior: must be interior");
    }
  }
  check_distribution(prior, "prior");
}

}  // namespace

void CheapTalkProfile::validate(const SenderReceiverGame& game) const {
  const int nm = static_cast<int>(messages.size());
  const int ns = game.num_states();
  const int na = game.num_actions();
  if (nm < std::max(na, ns)) {
    throw std::invalid_argument(
        "cheap talk: need at least as many messages as actions or states");
  }
  if (static_cast<int>(sender.size()) != ns) {
    throw std::invalid_argument("cheap talk: sender rows != states");
  }
  for (const auto& row : sender) {
    if (static_cast<int>(row.size()) != nm) {
      throw std::invalid_argument("cheap talk: sender row width");
    }
    check_distribution(row, "sender strategy");
  }
  if (static_cast<int>(receiver.size()) != nm) {
    throw std::invalid_argument("cheap talk: receiver rows != messages");
  }
  for (const auto& row : receiver) {
    if (static_cast<int>(row.size()) != na) {
      throw std::invalid_argument("cheap talk: receiver row width");
    }
    check_distribution(row, "receiver strategy");
  }
}

PbeReport verify_pbe(const SenderReceiverGame& game,
                     const CheapTalkProfile& profile, const Vec& prior) {
  profile.validate(game);
  const int ns = game.num_states();
  const int na = game.num_actions();
  const int nm = static_cast<int>(profile.messages.size());
  check_prior(prior, ns);

  // Sender payoff of each message given the receiver's strategy.
  Mat msg_payoff(ns, Vec(nm, Rational(0)));
  for (int w = 0; w < ns; ++w) {
    for (int m = 0; m < nm; ++m) {
      for (int a = 0; a < na; ++a) {
        if (!profile.receiver[m][a].is_zero()) {
          msg_payoff[w][m] += profile.receiver[m][a] * game.sender_payoff(w, a);
        }
      }
    }
  }

  PbeReport rep{.induced = Outcome::create([&] {
    Mat rows(ns, Vec(na, Rational(0)));
    for (int w = 0; w < ns; ++w) {
      for (int m = 0; m < nm; ++m) {
        const Rational& s = profile.sender[w][m];
        if (s.is_zero()) continue;
        for (int a = 0; a < na; ++a) {
          rows[w][a] += s * profile.receiver[m][a];
        }
      }
    }
    return rows;
  }())};

  bool ok = true;
  rep.sender_slacks.assign(ns, Rational(0));
  for (int w = 0; w < ns; ++w) {
    Rational best = msg_payoff[w][0];
    for (int m = 1; m < nm; ++m) best = std::max(best, msg_payoff[w][m]);
    Rational worst_used;
    bool any = false;
    for (int m = 0; m < nm; ++m) {
      if (profile.sender[w][m].is_zero()) continue;
      if (!any || msg_payoff[w][m] < worst_used) worst_used = msg_payoff[w][m];
      any = true;
    }
    rep.sender_slacks[w] = best - worst_used;
    if (!rep.sender_slacks[w].is_zero()) ok = false;
  }

  rep.posteriors.assign(nm, std::nullopt);
  rep.receiver_ok.assign(nm, true);
  for (int m = 0; m < nm; ++m) {
    Rational mass;
    for (int w = 0; w < ns; ++w) mass += prior[w] * profile.sender[w][m];
    if (mass.is_zero()) continue;
    Vec q(ns);
    for (int w = 0; w < ns; ++w) {
      q[w] = prior[w] * profile.sender[w][m] / mass;
    }
    auto best = best_response_actions(game, q);
    bool m_ok = true;
    for (int a = 0; a < na; ++a) {
      if (profile.receiver[m][a] > Rational(0) &&
          std::find(best.begin(), best.end(), a) == best.end()) {
        m_ok = false;
      }
    }
    rep.receiver_ok[m] = m_ok;
    rep.posteriors[m] = std::move(q);
    if (!m_ok) ok = false;
  }

  rep.is_equilibrium = ok;
  for (int w = 0; w < ns; ++w) {
    for (int m = 0; m < nm; ++m) {
      rep.sender_value += prior[w] * profile.sender[w][m] * msg_payoff[w][m];
    }
  }
  return rep;
}

std::vector<int> best_response_actions(const SenderReceiverGame& game,
                                       const Vec& belief) {
  if (static_cast<int>(belief.size()) != game.num_states()) {
    throw std::invalid_argument("belief: wrong length");
  }
  for (const auto& p : belief) {
    if (p < Rational(0)) throw std::invalid_argument("belief: negative");
  }
  if (sum(belief) != Rational(1)) {
    throw std::invalid_argument("belief: must sum to 1");
  }
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

SenderBestFeasible sender_best_feasible_action(
    const SenderReceiverGame& game) {
  if (!game.sender_state_independent()) {
    throw std::invalid_argument(
        "sender_best_feasible_action: sender payoff must be state-independent");
  }
  const int na = game.num_actions();
  const int ns = game.num_states();
  for (int a = 0; a < na; ++a) {
    for (int b = a + 1; b < na; ++b) {
      if (game.sender_payoff(0, a) == game.sender_payoff(0, b)) {
        throw std::invalid_argument(
            "sender_best_feasible_action: sender payoffs must be distinct");
      }
    }
  }
  SenderBestFeasible out;
  for (int a = 0; a < na; ++a) {
    // Feasibility over beliefs p: E_p[u_R(a) - u_R(b)] >= 0 for all b.
    LinearProgram prog = LinearProgram::maximize(Vec(ns, Rational(0)));
    prog.add_row(Vec(ns, Rational(1)), RowSense::kEq, Rational(1));
    for (int b = 0; b < na; ++b) {
      if (b == a) continue;
      Vec row(ns);
      for (int w = 0; w < ns; ++w) {
        row[w] = game.receiver_payoff(w, a) - game.receiver_payoff(w, b);
      }
      prog.add_row(std::move(row), RowSense::kGe, Rational(0));
    }
    if (lp::feasible_point(prog).optimal()) {
      out.feasible_actions.push_back(a);
    }
  }
  if (out.feasible_actions.empty()) {
    throw std::logic_error("sender_best_feasible_action: empty best-response set");
  }
  for (int a : out.feasible_actions) {
    if (out.best_action < 0 ||
        game.sender_payoff(0, a) > game.sender_payoff(0, out.best_action)) {
      out.best_action = a;
    }
  }
  return out;
}

StepFn quasiconcave_envelope_1d(const StepFn& value) {
  value.validate();
  return StepFn::pointwise_min(value.running_sup_left(),
                               value.running_sup_right());
}

EfficiencyPredicates efficiency_predicates(const SenderReceiverGame& game,
                                           const CheapTalkProfile& profile,
                                           const Vec& prior) {
  PbeReport pbe = verify_pbe(game, profile, prior);
  if (!pbe.is_equilibrium) {
    throw std::invalid_argument(
        "efficiency_predicates: profile is not an equilibrium");
  }
  Game priced = game.game().with_prior(prior);
  EfficiencyPredicates out{
      .cone = efficiency::ex_ante_efficient_cone(priced, pbe.induced)};
  auto sc = support_counts(pbe.induced);
  for (int s : sc.per_state) {
    if (s >= 2) out.stochastic = true;
  }
  out.generically_inefficient = out.stochastic;

  if (game.sender_state_independent()) {
    auto best = sender_best_feasible_action(game);
    bool pure_best = true;
    for (int w = 0; w < game.num_states(); ++w) {
      if (pbe.induced.prob(w, best.best_action) != Rational(1)) {
        pure_best = false;
      }
    }
    out.pure_favorite_efficient = pure_best;
    Rational top = game.sender_payoff(0, 0);
    for (int a = 1; a < game.num_actions(); ++a) {
      top = std::max(top, game.sender_payoff(0, a));
    }
    out.favorite_is_global = game.sender_payoff(0, best.best_action) == top;
  }
  return out;
}

}  // namespace effgames::cheaptalk
