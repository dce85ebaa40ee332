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

#ifndef EFFGAMES_IO_HPP_
#define EFFGAMES_IO_HPP_

#include <optional>
#include <string>
#include <vector>

#include "effgames/allocation.hpp"
#include "effgames/cheaptalk.hpp"
#include "effgames/efficiency.hpp"
#include "effgames/game.hpp"
#include "effgames/geometry2d.hpp"
#include "effgames/persuasion.hpp"

namespace effgames::io {

/// Raised for malformed documents; carries a human-readable reason.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Rationals in documents may be integers, finite decimals, or "num/den"
// strings; they are always emitted as strings.
Game game_from_json(const std::string& text);
std::string game_to_json(const Game& game);

Outcome outcome_from_json(const Game& game, const std::string& text);
std::string outcome_to_json(const Game& game, const Outcome& outcome);

cheaptalk::CheapTalkProfile profile_from_json(
    const persuasion::SenderReceiverGame& game, const std::string& text);
std::string profile_to_json(const persuasion::SenderReceiverGame& game,
                            const cheaptalk::CheapTalkProfile& profile);

allocation::AllocationInstance instance_from_json(const std::string& text);
std::string instance_to_json(const allocation::AllocationInstance& instance);

std::string certificate_to_json(const Game& game,
                                const efficiency::EfficiencyReport& report,
                                const efficiency::CountingReport& counting);
std::string certificates_to_json(
    const Game& game,
    const std::vector<efficiency::EfficiencyReport>& reports,
    const efficiency::CountingReport& counting);
std::string counting_to_json(const efficiency::CountingReport& counting);

std::string bp_to_json(const persuasion::SenderReceiverGame& game,
                       const Vec& prior, const persuasion::BpSolution& bp,
                       const std::optional<Rational>& cav_value);

std::string pbe_report_to_json(
    const persuasion::SenderReceiverGame& game,
    const cheaptalk::CheapTalkProfile& profile,
    const cheaptalk::PbeReport& report,
    const std::optional<cheaptalk::EfficiencyPredicates>& predicates);

std::string cheaptalk_analysis_to_json(
    const persuasion::SenderReceiverGame& game,
    const cheaptalk::SenderBestFeasible& best,
    const std::optional<persuasion::ValueFunction>& value,
    const std::optional<StepFn>& quasicav,
    const std::optional<PiecewiseLinear>& cav);

std::string allocation_report_to_json(
    const allocation::AllocationInstance& instance,
    const allocation::MechanismOutcome& mech,
    const allocation::DicReport& dic,
    const allocation::InefficiencyReport& inefficiency,
    const std::vector<allocation::InefficiencyReport>& random_draws);

std::string figure_to_json(const Game& game,
                           const geometry2d::FigureBundle& bundle);

std::string threshold_env_to_json(const persuasion::ThresholdEnv& env);
std::string region_report_to_json(const persuasion::RegionReport& region);
std::string threshold_report_to_json(const persuasion::ThresholdEnv& env,
                           const Vec& prior,
                           const persuasion::ThresholdInefficiencyReport& report);

/// One CSV row per interior grid prior, columns fixed:
/// prior coordinates, sender value, per-state support sizes, bound
/// pass/fail, cone verdict, R_* membership, T_p.
struct SweepRow {
  Vec prior;
  Rational sender_value;
  std::vector<int> support_sizes;
  bool bound_passes = false;
  bool cone_efficient = false;
  std::optional<bool> in_r_star;
  std::optional<Rational> t_p;
};
std::string sweep_to_csv(const std::vector<SweepRow>& rows, int num_states);

}  // namespace effgames::io

#endif  // EFFGAMES_IO_HPP_
