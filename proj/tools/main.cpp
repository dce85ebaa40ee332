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

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "effgames/allocation.hpp"
#include "effgames/cheaptalk.hpp"
#include "effgames/efficiency.hpp"
#include "effgames/geometry2d.hpp"
#include "effgames/io.hpp"
#include "effgames/lp.hpp"
#include "effgames/persuasion.hpp"
#include "effgames/sampling.hpp"

namespace {

using namespace effgames;  // NOLINT

constexpr int kExitEfficient = 0;
constexpr int kExitInefficient = 10;
constexpr int kExitInputError = 2;
constexpr int kExitDisagreement = 70;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_file(out_path, text);
  }
}

// Either a full comma-separated distribution or, for two-state games, a
// single rational giving the probability of the second state.
Vec parse_prior(const std::string& text, int num_states) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  if (parts.size() == 1 && num_states == 2) {
    Rational p = Rational::parse(parts[0]);
    return {Rational(1) - p, p};
  }
  if (static_cast<int>(parts.size()) != num_states) {
    throw io::ParseError("prior needs " + std::to_string(num_states) +
                         " comma-separated entries");
  }
  Vec prior;
  for (const auto& s : parts) prior.push_back(Rational::parse(s));
  return prior;
}

struct CheckArgs {
  std::string game_path;
  std::string outcome_path;
  std::string method = "both";
  std::string out_path;
};

int run_check(const CheckArgs& args) {
  Game game = io::game_from_json(io::read_file(args.game_path));
  Outcome outcome = io::outcome_from_json(game, io::read_file(args.outcome_path));
  auto counting = efficiency::counting_bound(game, outcome);

  std::vector<efficiency::EfficiencyReport> reports;
  if (args.method == "cone" || args.method == "both") {
    reports.push_back(efficiency::ex_ante_efficient_cone(game, outcome));
  }
  if (args.method == "dominance" || args.method == "both") {
    reports.push_back(efficiency::ex_ante_efficient_dominance(game, outcome));
  }
  if (reports.size() == 1) {
    emit(io::certificate_to_json(game, reports[0], counting), args.out_path);
  } else {
    emit(io::certificates_to_json(game, reports, counting), args.out_path);
    if (reports[0].verdict != reports[1].verdict) {
      std::cerr << "check: cone and dominance verdicts disagree\n";
      return kExitDisagreement;
    }
  }
  return reports[0].efficient() ? kExitEfficient : kExitInefficient;
}

int run_bound(const std::string& game_path, const std::string& outcome_path,
              const std::string& out_path) {
  Game game = io::game_from_json(io::read_file(game_path));
  Outcome outcome = io::outcome_from_json(game, io::read_file(outcome_path));
  auto counting = efficiency::counting_bound(game, outcome);
  emit(io::counting_to_json(counting), out_path);
  return counting.passes ? kExitEfficient : kExitInefficient;
}

int run_bp(const std::string& game_path, const std::string& prior_text,
           const std::string& out_path) {
  auto game = persuasion::SenderReceiverGame::from_game(
      io::game_from_json(io::read_file(game_path)));
  Vec prior = prior_text.empty()
                  ? game.game().prior()
                  : parse_prior(prior_text, game.num_states());
  auto bp = persuasion::solve_bp(game, prior);
  std::optional<Rational> cav_value;
  if (game.num_states() == 2) {
    auto vf = persuasion::value_function_1d(game);
    cav_value = persuasion::concavify_1d(vf).at(prior[1]);
  }
  emit(io::bp_to_json(game, prior, bp, cav_value), out_path);
  if (cav_value && *cav_value != bp.sender_value) {
    std::cerr << "bp: obedience LP and concave envelope disagree\n";
    return kExitDisagreement;
  }
  return kExitEfficient;
}

int run_sweep(const std::string& game_path, int grid,
              const std::string& out_path) {
  auto game = persuasion::SenderReceiverGame::from_game(
      io::game_from_json(io::read_file(game_path)));
  if (game.num_states() != 2) {
    throw io::ParseError("sweep: two-state games only (use threshold --grid)");
  }
  if (grid < 2) throw io::ParseError("sweep: grid must be >= 2");
  std::vector<io::SweepRow> rows;
  for (int i = 1; i < grid - 1; ++i) {
    Rational p(i, grid - 1);
    Vec prior{Rational(1) - p, p};
    auto bp = persuasion::solve_bp(game, prior);
    Game priced = game.game().with_prior(prior);
    auto counting = efficiency::counting_bound(priced, bp.policy);
    auto cone = efficiency::ex_ante_efficient_cone(priced, bp.policy);
    io::SweepRow row;
    row.prior = prior;
    row.sender_value = bp.sender_value;
    row.support_sizes = counting.per_state;
    row.bound_passes = counting.passes;
    row.cone_efficient = cone.efficient();
    rows.push_back(std::move(row));
  }
  emit(io::sweep_to_csv(rows, 2), out_path);
  return kExitEfficient;
}

struct ThresholdArgs {
  int n = 2;
  std::string threshold = "7/10";
  std::string sender_payoffs;
  std::string prior_text;
  int grid = 0;
  std::string out_path;
};

int run_threshold(const ThresholdArgs& args) {
  Vec us;
  if (args.sender_payoffs.empty()) {
    // Distinct by default: equal sender payoffs duplicate whole payoff
    // vectors in the safe state, a non-generic realization under which the
    // mixed persuasion outcome can be exactly efficient.
    for (int i = 1; i <= args.n; ++i) us.push_back(Rational(args.n + i, args.n));
  } else {
    std::string cur;
    for (char ch : args.sender_payoffs) {
      if (ch == ',') {
        us.push_back(Rational::parse(cur));
        cur.clear();
      } else {
        cur += ch;
      }
    }
    us.push_back(Rational::parse(cur));
  }
  auto env = persuasion::build_threshold_env(args.n, Rational::parse(args.threshold), us);

  if (args.grid > 0) {
    // All interior priors with coordinates that are multiples of 1/grid.
    std::vector<io::SweepRow> rows;
    const int ns = args.n + 1;
    std::vector<int> parts(ns, 1);
    auto enumerate = [&](auto&& self, int pos, int left) -> void {
      if (pos == ns - 1) {
        parts[pos] = left;
        Vec prior;
        for (int c : parts) prior.push_back(Rational(c, args.grid));
        auto region = persuasion::region_analysis(env, prior);
        auto bp = persuasion::solve_bp(env.realized, prior);
        Game priced = env.realized.game().with_prior(prior);
        auto counting = efficiency::counting_bound(priced, bp.policy);
        auto cone = efficiency::ex_ante_efficient_cone(priced, bp.policy);
        io::SweepRow row;
        row.prior = prior;
        row.sender_value = bp.sender_value;
        row.support_sizes = counting.per_state;
        row.bound_passes = counting.passes;
        row.cone_efficient = cone.efficient();
        row.in_r_star = region.in_r_star_strict;
        row.t_p = region.t_p;
        rows.push_back(std::move(row));
        return;
      }
      for (int c = 1; c <= left - (ns - 1 - pos); ++c) {
        parts[pos] = c;
        self(self, pos + 1, left - c);
      }
    };
    enumerate(enumerate, 0, args.grid);
    emit(io::sweep_to_csv(rows, ns), args.out_path);
    return kExitEfficient;
  }

  if (!args.prior_text.empty()) {
    Vec prior = parse_prior(args.prior_text, args.n + 1);
    auto report = persuasion::verify_threshold_inefficiency(env, prior);
    emit(io::threshold_report_to_json(env, prior, report), args.out_path);
    if (report.applicable && report.cone) {
      return report.cone->efficient() ? kExitEfficient : kExitInefficient;
    }
    return kExitEfficient;
  }

  emit(io::threshold_env_to_json(env), args.out_path);
  return kExitEfficient;
}

struct CheapTalkArgs {
  std::string game_path;
  std::string profile_path;
  std::string prior_text;
  std::string out_path;
};

int run_cheaptalk_verify(const CheapTalkArgs& args) {
  auto game = persuasion::SenderReceiverGame::from_game(
      io::game_from_json(io::read_file(args.game_path)));
  auto profile = io::profile_from_json(game, io::read_file(args.profile_path));
  Vec prior = args.prior_text.empty()
                  ? game.game().prior()
                  : parse_prior(args.prior_text, game.num_states());
  auto pbe = cheaptalk::verify_pbe(game, profile, prior);
  if (!pbe.is_equilibrium) {
    emit(io::pbe_report_to_json(game, profile, pbe, std::nullopt),
         args.out_path);
    std::cerr << "cheaptalk-verify: profile is not an equilibrium\n";
    return kExitInputError;
  }
  auto predicates = cheaptalk::efficiency_predicates(game, profile, prior);
  emit(io::pbe_report_to_json(game, profile, pbe, predicates), args.out_path);
  if (predicates.pure_favorite_efficient.has_value() &&
      predicates.favorite_is_global &&
      *predicates.pure_favorite_efficient != predicates.cone.efficient()) {
    std::cerr << "cheaptalk-verify: pure-a* predicate and cone test disagree\n";
    return kExitDisagreement;
  }
  return predicates.cone.efficient() ? kExitEfficient : kExitInefficient;
}

int run_cheaptalk_analyze(const std::string& game_path,
                          const std::string& out_path) {
  auto game = persuasion::SenderReceiverGame::from_game(
      io::game_from_json(io::read_file(game_path)));
  auto best = cheaptalk::sender_best_feasible_action(game);
  std::optional<persuasion::ValueFunction> vf;
  std::optional<StepFn> quasicav;
  std::optional<PiecewiseLinear> cav;
  if (game.num_states() == 2) {
    vf = persuasion::value_function_1d(game);
    cav = persuasion::concavify_1d(*vf);
    if (vf->piecewise_constant()) {
      quasicav = cheaptalk::quasiconcave_envelope_1d(vf->to_step());
    }
  }
  emit(io::cheaptalk_analysis_to_json(game, best, vf, quasicav, cav),
       out_path);
  return kExitEfficient;
}

struct AllocateArgs {
  std::string instance_path;
  std::string t_override;
  int draws = 20;
  std::uint64_t seed = 20260810;
  std::string out_path;
};

int run_allocate(const AllocateArgs& args) {
  auto instance = io::instance_from_json(io::read_file(args.instance_path));
  if (!args.t_override.empty()) {
    instance = allocation::AllocationInstance::create(
        instance.type_sets(), instance.prior(),
        [&instance] {
          Mat v(instance.num_states(), Vec(instance.agents()));
          for (int s = 0; s < instance.num_states(); ++s) {
            for (int i = 0; i < instance.agents(); ++i) {
              v[s][i] = instance.value(s, i);
            }
          }
          return v;
        }(),
        Rational::parse(args.t_override));
  }
  auto mech = allocation::run_mechanism(instance);
  auto dic = allocation::verify_dic(instance, mech.outcome);
  Game embedded = allocation::embed_as_game(instance);
  auto verdict = allocation::inefficiency_verdict(instance, mech, embedded);

  std::vector<allocation::InefficiencyReport> draws;
  sampling::Rng rng(args.seed);
  for (int d = 0; d < args.draws; ++d) {
    Mat values(instance.num_states(), Vec(instance.agents()));
    for (int s = 0; s < instance.num_states(); ++s) {
      for (int i = 0; i < instance.agents(); ++i) {
        values[s][i] = sampling::random_rational(rng, 1000, -1, 1);
      }
    }
    auto perturbed = instance.with_values(values);
    draws.push_back(allocation::inefficiency_verdict(
        instance, mech, allocation::embed_as_game(perturbed)));
  }
  emit(io::allocation_report_to_json(instance, mech, dic, verdict, draws),
       args.out_path);
  if (!verdict.assumptions_hold || !verdict.cone) return kExitEfficient;
  return verdict.cone->efficient() ? kExitEfficient : kExitInefficient;
}

int run_figure(const std::string& game_path, const std::string& outcome_path,
               const std::string& prior_text, const std::string& out_path) {
  Game game = io::game_from_json(io::read_file(game_path));
  if (!prior_text.empty()) {
    game = game.with_prior(parse_prior(prior_text, game.num_states()));
  }
  Outcome outcome = io::outcome_from_json(game, io::read_file(outcome_path));
  auto bundle = geometry2d::figure_data(game, outcome);
  emit(io::figure_to_json(game, bundle), out_path);
  return kExitEfficient;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact efficiency certification for finite games with incomplete "
      "information"};
  app.require_subcommand(1);

  CheckArgs check_args;
  auto* check = app.add_subcommand(
      "check", "Efficiency verdict and certificate for a game and outcome");
  check->add_option("--game", check_args.game_path, "game JSON file")
      ->required();
  check->add_option("--outcome", check_args.outcome_path, "outcome JSON file")
      ->required();
  check->add_option("--method", check_args.method, "cone | dominance | both")
      ->check(CLI::IsMember({"cone", "dominance", "both"}));
  check->add_option("--out", check_args.out_path, "output path");

  std::string bound_game, bound_outcome, bound_out;
  auto* bound = app.add_subcommand("bound", "Support-count bound only");
  bound->add_option("--game", bound_game)->required();
  bound->add_option("--outcome", bound_outcome)->required();
  bound->add_option("--out", bound_out);

  std::string bp_game, bp_prior, bp_out;
  auto* bp = app.add_subcommand(
      "bp", "Sender-optimal persuasion outcome under obedience");
  bp->add_option("--game", bp_game)->required();
  bp->add_option("--prior", bp_prior,
                 "prior override: full vector, or one rational (two states)");
  bp->add_option("--out", bp_out);

  std::string sweep_game, sweep_out;
  int sweep_grid = 101;
  auto* sweep = app.add_subcommand(
      "sweep", "Persuasion + efficiency across a two-state prior grid");
  sweep->add_option("--game", sweep_game)->required();
  sweep->add_option("--grid", sweep_grid, "grid point count (default 101)");
  sweep->add_option("--out", sweep_out);

  CheapTalkArgs ct_args;
  auto* ctv = app.add_subcommand("cheaptalk-verify",
                                 "Verify a PBE profile and test efficiency");
  ctv->add_option("--game", ct_args.game_path)->required();
  ctv->add_option("--profile", ct_args.profile_path)->required();
  ctv->add_option("--prior", ct_args.prior_text);
  ctv->add_option("--out", ct_args.out_path);

  std::string cta_game, cta_out;
  auto* cta = app.add_subcommand(
      "cheaptalk-analyze",
      "Best-response-feasible actions, value function, envelopes");
  cta->add_option("--game", cta_game)->required();
  cta->add_option("--out", cta_out);

  ThresholdArgs th_args;
  auto* th = app.add_subcommand(
      "threshold", "Threshold persuasion environment: regions and sweeps");
  th->add_option("--n", th_args.n, "number of risky actions")->required();
  th->add_option("--T", th_args.threshold, "threshold in (1/2, 1)")
      ->required();
  th->add_option("--us", th_args.sender_payoffs,
                 "sender payoffs for risky actions (default all 1)");
  th->add_option("--prior", th_args.prior_text, "single prior to analyze");
  th->add_option("--grid", th_args.grid,
                 "sweep the simplex with steps of 1/grid");
  th->add_option("--out", th_args.out_path);

  AllocateArgs al_args;
  auto* al = app.add_subcommand(
      "allocate", "Ranking-based allocation mechanism analysis");
  al->add_option("--instance", al_args.instance_path, "instance JSON file")
      ->required();
  al->add_option("--t", al_args.t_override, "selection threshold override");
  al->add_option("--draws", al_args.draws,
                 "random principal-value draws for the genericity check");
  al->add_option("--seed", al_args.seed, "seed for the random draws");
  al->add_option("--out", al_args.out_path);

  std::string fig_game, fig_outcome, fig_prior, fig_out;
  auto* fig = app.add_subcommand(
      "figure", "Two-player payoff geometry bundle for plotting");
  fig->add_option("--game", fig_game)->required();
  fig->add_option("--outcome", fig_outcome)->required();
  fig->add_option("--prior", fig_prior);
  fig->add_option("--out", fig_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitInputError;
  }

  try {
    if (check->parsed()) return run_check(check_args);
    if (bound->parsed()) return run_bound(bound_game, bound_outcome, bound_out);
    if (bp->parsed()) return run_bp(bp_game, bp_prior, bp_out);
    if (sweep->parsed()) return run_sweep(sweep_game, sweep_grid, sweep_out);
    if (ctv->parsed()) return run_cheaptalk_verify(ct_args);
    if (cta->parsed()) return run_cheaptalk_analyze(cta_game, cta_out);
    if (th->parsed()) return run_threshold(th_args);
    if (al->parsed()) return run_allocate(al_args);
    if (fig->parsed()) return run_figure(fig_game, fig_outcome, fig_prior, fig_out);
  } catch (const efficiency::InternalInconsistency& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitDisagreement;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
