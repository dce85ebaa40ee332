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

#include <benchmark/benchmark.h>

#include "effgames/efficiency.hpp"
#include "effgames/geometry2d.hpp"
#include "effgames/lp.hpp"
#include "effgames/persuasion.hpp"
#include "effgames/sampling.hpp"

namespace {

using namespace effgames;  // NOLINT

void BM_SimplexRandom(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  sampling::Rng rng(1);
  std::vector<lp::LinearProgram> programs;
  for (int i = 0; i < 32; ++i) {
    auto prog = lp::LinearProgram::maximize(Vec(n));
    for (int j = 0; j < n; ++j) {
      prog.objective[j] = sampling::random_rational(rng, 9, -9, 9);
    }
    for (int r = 0; r < n; ++r) {
      Vec row(n);
      for (int j = 0; j < n; ++j) row[j] = sampling::random_rational(rng, 9, -9, 9);
      prog.add_row(std::move(row), lp::RowSense::kLe,
                   sampling::random_rational(rng, 9, 1, 9));
    }
    programs.push_back(std::move(prog));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(lp::solve(programs[i++ % programs.size()]));
  }
}
BENCHMARK(BM_SimplexRandom)->Arg(4)->Arg(8)->Arg(12);

void BM_ConeTest(benchmark::State& state) {
  sampling::Rng rng(2);
  Game g = sampling::random_game(rng, 3, 3, {2, 2, 1}, 100);
  Outcome mu = sampling::random_outcome(rng, g, {3, 2, 2}, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(efficiency::ex_ante_efficient_cone(g, mu));
  }
}
BENCHMARK(BM_ConeTest);

void BM_DominanceTest(benchmark::State& state) {
  sampling::Rng rng(2);
  Game g = sampling::random_game(rng, 3, 3, {2, 2, 1}, 100);
  Outcome mu = sampling::random_outcome(rng, g, {3, 2, 2}, 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(efficiency::ex_ante_efficient_dominance(g, mu));
  }
}
BENCHMARK(BM_DominanceTest);

void BM_PersuasionThreshold(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Vec us;
  for (int i = 1; i <= n; ++i) us.push_back(Rational(n + i, n));
  auto env = persuasion::build_threshold_env(n, Rational(4, 5), us);
  Vec prior(n + 1, Rational(1, n + 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(persuasion::solve_bp(env.realized, prior));
  }
}
BENCHMARK(BM_PersuasionThreshold)->Arg(2)->Arg(3)->Arg(4);

void BM_MinkowskiSum(benchmark::State& state) {
  sampling::Rng rng(3);
  Game g = sampling::random_game(rng, 2, 3, {1, 6}, 30);
  std::vector<std::pair<Rational, geometry2d::Polygon>> terms;
  for (int w = 0; w < 3; ++w) {
    terms.emplace_back(g.prior(w), geometry2d::state_payoff_polygon(g, w));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(geometry2d::minkowski_sum(terms));
  }
}
BENCHMARK(BM_MinkowskiSum);

}  // namespace

BENCHMARK_MAIN();
