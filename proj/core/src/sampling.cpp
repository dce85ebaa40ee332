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

#include "effgames/sampling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace effgames::sampling {

Rational random_rational(Rng& rng, int max_den, int lo, int hi) {
  int den = rng.uniform_int(1, max_den);
  int num = rng.uniform_int(lo * den, hi * den);
  return Rational(num, den);
}

Vec random_interior_distribution(Rng& rng, int size, int max_den) {
  Vec raw(size);
  Rational total;
  for (int i = 0; i < size; ++i) {
    raw[i] = Rational(rng.uniform_int(1, max_den), 1);
    total += raw[i];
  }
  for (auto& x : raw) x /= total;
  return raw;
}

Game random_game(Rng& rng, int players, int num_states,
                 const std::vector<int>& actions_per_player, int max_den) {
  std::vector<std::string> states;
  for (int w = 0; w < num_states; ++w) states.push_back("w" + std::to_string(w));
  std::vector<std::vector<std::string>> actions(players);
  int num_joint = 1;
  for (int i = 0; i < players; ++i) {
    for (int a = 0; a < actions_per_player[i]; ++a) {
      actions[i].push_back("p" + std::to_string(i) + "a" + std::to_string(a));
    }
    num_joint *= actions_per_player[i];
  }
  Vec prior = random_interior_distribution(rng, num_states, max_den);
  std::vector<Mat> payoffs(num_states, Mat(num_joint, Vec(players)));
  for (int w = 0; w < num_states; ++w) {
    for (int a = 0; a < num_joint; ++a) {
      for (int i = 0; i < players; ++i) {
        payoffs[w][a][i] = random_rational(rng, max_den, -10, 10);
      }
    }
  }
  return Game::create(std::move(states), std::move(prior), std::move(actions),
                      std::move(payoffs));
}

Outcome random_outcome(Rng& rng, const Game& game,
                       const std::vector<int>& support_sizes, int max_den) {
  if (static_cast<int>(support_sizes.size()) != game.num_states()) {
    throw std::invalid_argument("random_outcome: support plan length");
  }
  Mat rows(game.num_states(), Vec(game.num_joint(), Rational(0)));
  for (int w = 0; w < game.num_states(); ++w) {
    int size = support_sizes[w];
    if (size < 1 || size > game.num_joint()) {
      throw std::invalid_argument("random_outcome: bad support size");
    }
    std::vector<int> idx(game.num_joint());
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng.engine());
    Vec mass(size);
    Rational total;
    for (int j = 0; j < size; ++j) {
      mass[j] = Rational(rng.uniform_int(1, max_den), 1);
      total += mass[j];
    }
    for (int j = 0; j < size; ++j) rows[w][idx[j]] = mass[j] / total;
  }
  return Outcome::create(std::move(rows));
}

std::vector<int> random_support_plan(Rng& rng, int num_states, int num_joint,
                                     int min_total, int max_total) {
  if (min_total < num_states || max_total > num_states * num_joint ||
      min_total > max_total) {
    throw std::invalid_argument("random_support_plan: impossible totals");
  }
  for (;;) {
    std::vector<int> plan(num_states);
    int total = 0;
    for (int w = 0; w < num_states; ++w) {
      plan[w] = rng.uniform_int(1, num_joint);
      total += plan[w];
    }
    if (total >= min_total && total <= max_total) return plan;
  }
}

}  // namespace effgames::sampling
