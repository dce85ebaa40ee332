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

// End-to-end acceptance suite. Each criterion prints one pass/fail line;
// the process exits nonzero if any criterion fails. Everything is exact:
// no tolerances anywhere.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "effgames/allocation.hpp"
#include "effgames/cheaptalk.hpp"
#include "effgames/efficiency.hpp"
#include "effgames/geometry2d.hpp"
#include "effgames/io.hpp"
#include "effgames/persuasion.hpp"
#include "effgames/sampling.hpp"
#include "json.hpp"

using namespace effgames;  // NOLINT
using nlohmann::json;

namespace {

const std::string kBin = EFFGAMES_CLI_BIN;
const std::string kData = EFFGAMES_DATA_DIR;

std::string temp_path(const std::string& name) {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/effgames_test_XXXXXX";
    const char* made = mkdtemp(tmpl);
    return std::string(made ? made : "/tmp");
  }();
  static int counter = 0;
  return dir + "/" + std::to_string(counter++) + "_" + name;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string out_path = temp_path("cli.out");
  std::string cmd = kBin + " " + args + " > " + out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::stringstream ss;
  ss << in.rdbuf();
  r.out = ss.str();
  std::remove(out_path.c_str());
  return r;
}

struct Failure {
  std::string reason;
};

#define ACCEPT_REQUIRE(cond, why)            \
  do {                                       \
    if (!(cond)) throw Failure{why};         \
  } while (0)

Game load_example1() {
  return io::game_from_json(io::read_file(kData + "/example1_game.json"));
}

persuasion::SenderReceiverGame example1_sr() {
  return persuasion::SenderReceiverGame::from_game(load_example1());
}

Vec two_state_prior(const Rational& p1) { return {Rational(1) - p1, p1}; }

void verify_certificate(const Game& g, const Outcome& mu,
                        const efficiency::EfficiencyReport& rep) {
  if (rep.efficient()) {
    ACCEPT_REQUIRE(rep.weights.size() == static_cast<std::size_t>(g.players()),
                   "efficient verdict without a full weight vector");
    for (const auto& n : rep.weights) {
      ACCEPT_REQUIRE(n >= Rational(1), "weight below one");
    }
    for (int w = 0; w < g.num_states(); ++w) {
      Rational attained = dot(rep.weights, state_payoff(g, mu, w));
      Rational best = attained;
      for (int a = 0; a < g.num_joint(); ++a) {
        Rational v = dot(rep.weights, g.payoff(w, a));
        if (v > best) best = v;
      }
      ACCEPT_REQUIRE(attained == best,
                     "weights fail to support a state payoff");
    }
  } else {
    Vec base = induced_payoff(g, mu);
    ACCEPT_REQUIRE(rep.dominating_point.size() == base.size(),
                   "inefficient verdict without a dominating point");
    bool strict = false;
    for (std::size_t i = 0; i < base.size(); ++i) {
      ACCEPT_REQUIRE(rep.dominating_point[i] >= base[i],
                     "dominating point not componentwise above");
      if (rep.dominating_point[i] > base[i]) strict = true;
    }
    ACCEPT_REQUIRE(strict, "dominating point equals the outcome payoff");
    ACCEPT_REQUIRE(rep.dominating_outcome.has_value(),
                   "no feasible outcome behind the dominating point");
    ACCEPT_REQUIRE(
        induced_payoff(g, *rep.dominating_outcome) == rep.dominating_point,
        "dominating point is not the payoff of its outcome");
  }
}

// 1. The bundled example game: efficient exactly in case (b).
void criterion1() {
  const std::string game = kData + "/example1_game.json";
  auto a = run_cli("check --game " + game + " --outcome " + kData +
                   "/example1_outcome_a.json --method both");
  auto b = run_cli("check --game " + game + " --outcome " + kData +
                   "/example1_outcome_b.json --method both");
  auto c = run_cli("check --game " + game + " --outcome " + kData +
                   "/example1_outcome_c.json --method both");
  ACCEPT_REQUIRE(b.exit_code == 0, "case (b) must exit 0");
  ACCEPT_REQUIRE(a.exit_code == 10, "case (a) must exit 10");
  ACCEPT_REQUIRE(c.exit_code == 10, "case (c) must exit 10");
  json jb = json::parse(b.out), ja = json::parse(a.out), jc = json::parse(c.out);
  for (const auto& cert : jb) {
    ACCEPT_REQUIRE(cert["verdict"] == "efficient", "case (b) verdict");
    ACCEPT_REQUIRE(cert.contains("weights"), "case (b) weights missing");
  }
  for (const json& doc : {ja, jc}) {
    for (const auto& cert : doc) {
      ACCEPT_REQUIRE(cert["verdict"] == "inefficient", "case (a)/(c) verdict");
      ACCEPT_REQUIRE(cert["witness"].contains("dominating_point"),
                     "case (a)/(c) witness missing");
    }
  }
}

// 2. Persuasion values and supports at the three worked priors equal the
// concave-envelope segments exactly.
void criterion2() {
  const std::string game = kData + "/example1_game.json";
  struct Expect {
    const char* prior;
    Rational value;
    std::vector<std::pair<std::string, std::string>> support;  // state, action
  };
  auto segment_value = [](const Rational& p) {
    if (p <= Rational(1, 5)) return Rational(40) * p + Rational(2);
    if (p <= Rational(2, 5)) return Rational(10);
    return Rational(15) * (Rational(1) - p) + Rational(1);
  };
  std::vector<Expect> cases{
      {"1/10", Rational(6), {{"w0", "s,a0"}, {"w0", "s,a1"}, {"w1", "s,a1"}}},
      {"3/10", Rational(10), {{"w0", "s,a1"}, {"w1", "s,a1"}}},
      {"7/10", Rational(11, 2), {{"w0", "s,a1"}, {"w1", "s,a1"}, {"w1", "s,a4"}}}};
  for (const auto& expect : cases) {
    auto r = run_cli("bp --game " + game + " --prior " +
                     std::string(expect.prior));
    ACCEPT_REQUIRE(r.exit_code == 0, "bp must exit 0");
    json j = json::parse(r.out);
    Rational value = Rational::parse(j["sender_value"].get<std::string>());
    ACCEPT_REQUIRE(value == expect.value, "sender value mismatch");
    ACCEPT_REQUIRE(value == segment_value(Rational::parse(expect.prior)),
                   "value off the envelope segment");
    ACCEPT_REQUIRE(j["concave_envelope_agrees"] == true,
                   "independent envelope route disagrees");
    int listed = 0;
    for (const auto& [state, row] : j["outcome"].items()) {
      listed += static_cast<int>(row.size());
    }
    ACCEPT_REQUIRE(listed == static_cast<int>(expect.support.size()),
                   "support size mismatch");
    for (const auto& [state, action] : expect.support) {
      ACCEPT_REQUIRE(j["outcome"][state].contains(action),
                     "support pattern mismatch");
    }
  }
}

// 3. On the 101-point grid the persuasion outcome is efficient exactly for
// priors in [1/5, 2/5].
void criterion3() {
  auto g = example1_sr();
  for (int i = 1; i < 100; ++i) {
    Rational p(i, 100);
    auto bp = persuasion::solve_bp(g, two_state_prior(p));
    Game priced = g.game().with_prior(two_state_prior(p));
    bool efficient =
        efficiency::ex_ante_efficient_cone(priced, bp.policy).efficient();
    bool inside = Rational(1, 5) <= p && p <= Rational(2, 5);
    ACCEPT_REQUIRE(efficient == inside, "efficiency region mismatch at i=" +
                                            std::to_string(i));
  }
}

// 4 and 5. Cone and dominance tests agree on >= 1000 random instances and
// every verdict ships a verified certificate.
void criterion4_5(bool check_certificates) {
  sampling::Rng rng(check_certificates ? 1001 : 1000);
  int done = 0;
  while (done < 1000) {
    int k = 2 + rng.uniform_int(0, 1);
    std::vector<int> shape;
    int joint = 1;
    for (int i = 0; i < k; ++i) {
      int cap = (i == k - 1) ? std::max(1, 6 / joint) : (k == 2 ? 3 : 2);
      int n = 1 + rng.uniform_int(0, cap - 1);
      shape.push_back(n);
      joint *= n;
    }
    if (joint < 2) continue;
    int ns = 1 + rng.uniform_int(0, 2);
    Game g = sampling::random_game(rng, k, ns, shape, 1000);
    auto plan =
        sampling::random_support_plan(rng, ns, joint, ns, ns * joint);
    Outcome mu = sampling::random_outcome(rng, g, plan, 1000);
    auto cone = efficiency::ex_ante_efficient_cone(g, mu);
    auto dom = efficiency::ex_ante_efficient_dominance(g, mu);
    ACCEPT_REQUIRE(cone.verdict == dom.verdict,
                   "cone and dominance verdicts disagree");
    if (check_certificates) {
      verify_certificate(g, mu, cone);
      verify_certificate(g, mu, dom);
    }
    ++done;
  }
}

// 6. Random instances whose support count reaches the bound are always
// declared inefficient by the exact test.
void criterion6() {
  sampling::Rng rng(600);
  int done = 0;
  while (done < 1000) {
    int k = 2 + rng.uniform_int(0, 1);
    std::vector<int> shape{2, k == 2 ? 3 : 2};
    if (k == 3) shape.push_back(1);
    int joint = shape[0] * shape[1] * (k == 3 ? shape[2] : 1);
    int ns = 2 + rng.uniform_int(0, 1);
    if (ns * joint < k + ns) continue;
    Game g = sampling::random_game(rng, k, ns, shape, 1000);
    auto plan =
        sampling::random_support_plan(rng, ns, joint, k + ns, ns * joint);
    Outcome mu = sampling::random_outcome(rng, g, plan, 1000);
    ACCEPT_REQUIRE(!efficiency::counting_bound(g, mu).passes,
                   "support plan must violate the bound");
    ACCEPT_REQUIRE(!efficiency::ex_ante_efficient_cone(g, mu).efficient(),
                   "bound-violating outcome declared efficient");
    ++done;
  }
}

// 7. The support set of a weighted Minkowski sum is the weighted sum of
// the support sets, exactly, across random games and directions.
void criterion7() {
  using namespace effgames::geometry2d;  // NOLINT
  sampling::Rng rng(700);
  for (int game_idx = 0; game_idx < 50; ++game_idx) {
    int ns = 2 + rng.uniform_int(0, 1);
    Game g = sampling::random_game(rng, 2, ns, {1, 1 + rng.uniform_int(1, 3)},
                                   60);
    std::vector<std::pair<Rational, Polygon>> terms;
    for (int w = 0; w < ns; ++w) {
      terms.emplace_back(g.prior(w), state_payoff_polygon(g, w));
    }
    Polygon fp = minkowski_sum(terms);
    int directions = 0;
    while (directions < 50) {
      Vec2 n{sampling::random_rational(rng, 9, -8, 8),
             sampling::random_rational(rng, 9, -8, 8)};
      if (n.x.is_zero() && n.y.is_zero()) continue;
      ++directions;
      Face whole = support_set(fp, n);
      std::vector<std::pair<Rational, Polygon>> faces;
      for (const auto& [w, poly] : terms) {
        faces.emplace_back(w, Polygon::hull(support_set(poly, n).points));
      }
      ACCEPT_REQUIRE(Polygon::hull(whole.points) == minkowski_sum(faces),
                     "maximizer identity violated");
    }
  }
}

// 8. The worked cheap-talk profiles: equilibrium checks, the quasiconcave
// envelope value, and agreement between the pure-favorite predicate and
// the exact cone verdict.
void criterion8() {
  auto g = example1_sr();
  auto informative = io::profile_from_json(
      g, io::read_file(kData + "/cheaptalk_informative_p50.json"));
  Vec half = two_state_prior(Rational(1, 2));
  auto pbe = cheaptalk::verify_pbe(g, informative, half);
  ACCEPT_REQUIRE(pbe.is_equilibrium, "informative profile must verify");
  ACCEPT_REQUIRE(pbe.sender_value == Rational(3), "sender value must be 3");
  auto vf = persuasion::value_function_1d(g);
  auto quasi = cheaptalk::quasiconcave_envelope_1d(vf.to_step());
  ACCEPT_REQUIRE(quasi.at(Rational(1, 2)) == Rational(3),
                 "quasiconcave envelope at 1/2 must be 3");
  auto pred_inf = cheaptalk::efficiency_predicates(g, informative, half);
  ACCEPT_REQUIRE(pred_inf.pure_favorite_efficient.has_value() &&
                     !*pred_inf.pure_favorite_efficient,
                 "informative profile does not induce the favorite");
  ACCEPT_REQUIRE(!pred_inf.cone.efficient(),
                 "informative equilibrium must be inefficient");

  auto babble1 = io::profile_from_json(
      g, io::read_file(kData + "/cheaptalk_babbling_a1.json"));
  auto pred1 = cheaptalk::efficiency_predicates(
      g, babble1, two_state_prior(Rational(3, 10)));
  ACCEPT_REQUIRE(*pred1.pure_favorite_efficient && pred1.cone.efficient(),
                 "babbling on the favorite must be efficient");

  auto babble3 = io::profile_from_json(
      g, io::read_file(kData + "/cheaptalk_babbling_a3.json"));
  auto pred3 = cheaptalk::efficiency_predicates(
      g, babble3, two_state_prior(Rational(7, 10)));
  ACCEPT_REQUIRE(!*pred3.pure_favorite_efficient && !pred3.cone.efficient(),
                 "babbling away from the favorite must be inefficient");
}

// 9. Threshold environment: mixed and inefficient persuasion outcomes on
// the whole interior of the starred region, and for every tested
// threshold above the prior's cutoff.
void criterion9() {
  Vec us{Rational(3, 2), Rational(2)};
  auto env = persuasion::build_threshold_env(2, Rational(7, 10), us);
  const int grid = 40;
  int inside = 0;
  for (int i = 1; i <= grid - 2; ++i) {
    for (int j = 1; j <= grid - 1 - i; ++j) {
      int k = grid - i - j;
      Vec prior{Rational(i, grid), Rational(j, grid), Rational(k, grid)};
      auto region = persuasion::region_analysis(env, prior);
      if (!region.in_r_star_strict) continue;
      ++inside;
      auto rep = persuasion::verify_threshold_inefficiency(env, prior);
      ACCEPT_REQUIRE(rep.applicable, "region report inconsistent");
      ACCEPT_REQUIRE(rep.mixed, "outcome not mixed inside the region");
      ACCEPT_REQUIRE(!rep.cone->efficient(),
                     "outcome efficient inside the region");
    }
  }
  ACCEPT_REQUIRE(inside > 0, "the starred region misses the grid");

  Vec uniform(3, Rational(1, 3));
  {
    auto region = persuasion::region_analysis(env, uniform);
    ACCEPT_REQUIRE(region.t_p == Rational(2, 3),
                   "uniform prior cutoff must be 2/3");
  }
  for (const Rational& t :
       {Rational(27, 40), Rational(7, 10), Rational(3, 4), Rational(9, 10)}) {
    auto env_t = persuasion::build_threshold_env(2, t, us);
    auto rep = persuasion::verify_threshold_inefficiency(env_t, uniform);
    ACCEPT_REQUIRE(rep.applicable, "threshold above the cutoff must apply");
    ACCEPT_REQUIRE(!rep.cone->efficient(),
                   "outcome must be inefficient above the cutoff");
  }
}

// 10. The worked allocation instance: exhaustive truthfulness, two-action
// support everywhere, a violated bound, and cone-inefficiency across
// twenty random principal-value draws.
void criterion10() {
  auto inst = io::instance_from_json(
      io::read_file(kData + "/allocation_worked.json"));
  auto mech = allocation::run_mechanism(inst);
  ACCEPT_REQUIRE(allocation::verify_dic(inst, mech.outcome).holds,
                 "mechanism must be truthful");
  auto counts = support_counts(mech.outcome);
  ACCEPT_REQUIRE((counts.per_state == std::vector<int>{2, 2, 2, 2}),
                 "every state must randomize over two actions");
  auto base = allocation::inefficiency_verdict(inst, mech,
                                        allocation::embed_as_game(inst));
  ACCEPT_REQUIRE(base.assumptions_hold, "worked instance assumptions");
  ACCEPT_REQUIRE(base.counting->total == 8 && base.counting->bound == 7 &&
                     !base.counting->passes,
                 "bound must fail 8 > 7");
  ACCEPT_REQUIRE(!base.cone->efficient(), "worked instance cone verdict");
  sampling::Rng rng(1010);
  for (int draw = 0; draw < 20; ++draw) {
    Mat values(inst.num_states(), Vec(inst.agents()));
    for (int s = 0; s < inst.num_states(); ++s) {
      for (int i = 0; i < inst.agents(); ++i) {
        values[s][i] = sampling::random_rational(rng, 1000, -1, 1);
      }
    }
    auto rep = allocation::inefficiency_verdict(
        inst, mech, allocation::embed_as_game(inst.with_values(values)));
    ACCEPT_REQUIRE(rep.cone.has_value() && !rep.cone->efficient(),
                   "random principal draw escaped inefficiency");
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* label;
    void (*fn)();
  };
  auto run4 = [] { criterion4_5(false); };
  auto run5 = [] { criterion4_5(true); };
  std::vector<Criterion> criteria{
      {"1  worked-example verdicts (efficient only in case b)", criterion1},
      {"2  persuasion values 6, 10, 11/2 with the worked supports",
       criterion2},
      {"3  efficiency region is exactly [1/5, 2/5] on the 101 grid",
       criterion3},
      {"4  cone == dominance on 1000 random instances", run4},
      {"5  every verdict ships a verified exact certificate", run5},
      {"6  bound violations are always LP-inefficient (1000 draws)",
       criterion6},
      {"7  Minkowski maximizer identity (50 games x 50 directions)",
       criterion7},
      {"8  cheap-talk equilibria match the envelope and cone verdicts",
       criterion8},
      {"9  threshold region: mixed and inefficient everywhere inside",
       criterion9},
      {"10 allocation mechanism: truthful, bound-violating, inefficient",
       criterion10},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    try {
      c.fn();
      std::cout << "[PASS] " << c.label << "\n";
    } catch (const Failure& f) {
      ++failures;
      std::cout << "[FAIL] " << c.label << " -- " << f.reason << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "[FAIL] " << c.label << " -- unexpected error: " << e.what()
                << "\n";
    }
  }
  if (failures == 0) {
    std::cout << "acceptance: all 10 criteria passed\n";
  } else {
    std::cout << "acceptance: " << failures << " criteria failed\n";
  }
  return failures == 0 ? 0 : 1;
}
