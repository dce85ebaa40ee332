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

#ifndef EFFGAMES_SAMPLING_HPP_
#define EFFGAMES_SAMPLING_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "effgames/game.hpp"

namespace effgames::sampling {

/// Deterministic source for sampled tests and sweeps.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(eng_);
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

/// Uniform rational in [lo, hi] with denominator at most max_den.
Rational random_rational(Rng& rng, int max_den, int lo, int hi);

/// Strictly positive rationals summing to exactly 1.
Vec random_interior_distribution(Rng& rng, int size, int max_den);

/// A random game with the given shape and payoff denominators.
Game random_game(Rng& rng, int players, int num_states,
                 const std::vector<int>& actions_per_player, int max_den);

/// A random outcome with the prescribed per-state support sizes.
Outcome random_outcome(Rng& rng, const Game& game,
                       const std::vector<int>& support_sizes, int max_den);

/// Random support sizes whose total lands in [min_total, max_total].
std::vector<int> random_support_plan(Rng& rng, int num_states, int num_joint,
                                     int min_total, int max_total);

}  // namespace effgames::sampling

#endif  // EFFGAMES_SAMPLING_HPP_
