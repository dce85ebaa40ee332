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

#include "effgames/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace effgames::io {

namespace {

using nlohmann::json;

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  return doc;
}

Rational rational_from(const json& j) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad rational: ") + e.what());
    }
  }
  if (j.is_number_integer()) {
    return Rational(static_cast<long long>(j.get<std::int64_t>()));
  }
  if (j.is_number_unsigned()) {
    return Rational(static_cast<long long>(j.get<std::uint64_t>()));
  }
  if (j.is_number_float()) {
    // Recover the shortest fixed-notation decimal that parses back to the
    // same double; finite-decimal literals round-trip exactly this way.
    char buf[512];
    auto res = std::to_chars(buf, buf + sizeof(buf), j.get<double>(),
                             std::chars_format::fixed);
    if (res.ec != std::errc()) throw ParseError("bad float literal");
    return Rational::parse(std::string(buf, res.ptr));
  }
  throw ParseError("expected a rational (integer, decimal, or \"num/den\")");
}

json rational_to(const Rational& r) { return json(r.str()); }

json vec_to(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(rational_to(x));
  return arr;
}

json outcome_to(const Game& game, const Outcome& outcome) {
  json obj = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    json row = json::object();
    for (int a = 0; a < game.num_joint(); ++a) {
      if (!outcome.prob(w, a).is_zero()) {
        row[game.joint_label(a)] = rational_to(outcome.prob(w, a));
      }
    }
    obj[game.states()[w]] = std::move(row);
  }
  return obj;
}

json counting_to(const efficiency::CountingReport& counting) {
  json obj;
  obj["total"] = counting.total;
  obj["bound"] = counting.bound;
  obj["passes"] = counting.passes;
  obj["per_state"] = counting.per_state;
  return obj;
}

json certificate_to(const Game& game,
                    const efficiency::EfficiencyReport& rep,
                    const efficiency::CountingReport& counting) {
  json obj;
  obj["verdict"] = rep.efficient() ? "efficient" : "inefficient";
  obj["method"] =
      rep.method == efficiency::Method::kCone ? "cone" : "dominance";
  if (rep.efficient()) {
    obj["weights"] = vec_to(rep.weights);
  } else {
    json witness;
    if (!rep.lambda.empty()) {
      json lam = json::object();
      for (const auto& [key, val] : rep.lambda) {
        lam[game.states()[key.first]][game.joint_label(key.second)] =
            rational_to(val);
      }
      witness["lambda"] = std::move(lam);
    }
    witness["dominating_point"] = vec_to(rep.dominating_point);
    obj["witness"] = std::move(witness);
    if (rep.weakly_efficient) {
      obj["note"] =
          "weakly efficient: dominated, but by no uniformly strict "
          "improvement (supported only by boundary weights)";
    }
  }
  obj["counting"] = counting_to(counting);
  return obj;
}

json vec2_to(const geometry2d::Vec2& v) {
  return json::array({rational_to(v.x), rational_to(v.y)});
}

json polygon_to(const geometry2d::Polygon& p) {
  json arr = json::array();
  for (const auto& v : p.vertices()) arr.push_back(vec2_to(v));
  return arr;
}

const char* cone_kind_name(geometry2d::NormalCone::Kind k) {
  using Kind = geometry2d::NormalCone::Kind;
  switch (k) {
    case Kind::kRay: return "ray";
    case Kind::kWedge: return "wedge";
    case Kind::kHalfPlane: return "half-plane";
    case Kind::kLine: return "line";
    case Kind::kFull: return "full";
  }
  return "?";
}

json cone_to(const geometry2d::NormalCone& c) {
  json obj;
  obj["kind"] = cone_kind_name(c.kind);
  obj["lo"] = vec2_to(c.lo);
  obj["hi"] = vec2_to(c.hi);
  return obj;
}

json cone_at_point_to(const geometry2d::ConeAtPoint& cp) {
  json obj;
  obj["on_boundary"] = cp.on_boundary;
  if (cp.cone) obj["cone"] = cone_to(*cp.cone);
  if (cp.positive_cone) obj["positive_cone"] = cone_to(*cp.positive_cone);
  return obj;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write file: " + path);
  out << text;
}

Game game_from_json(const std::string& text) {
  json doc = parse_document(text);
  try {
    std::vector<std::string> states =
        doc.at("states").get<std::vector<std::string>>();
    Vec prior;
    for (const auto& p : doc.at("prior")) prior.push_back(rational_from(p));
    std::vector<std::vector<std::string>> actions;
    for (const auto& as : doc.at("actions")) {
      actions.push_back(as.get<std::vector<std::string>>());
    }
    if (doc.contains("players") &&
        doc.at("players").get<int>() != static_cast<int>(actions.size())) {
      throw ParseError("players field disagrees with the action lists");
    }
    int num_joint = 1;
    for (const auto& as : actions) num_joint *= static_cast<int>(as.size());

    // Resolve labels on a throwaway game with safe placeholder payoffs.
    std::vector<Mat> zeros(
        states.size(), Mat(num_joint, Vec(actions.size(), Rational(0))));
    Vec uniform(states.size(),
                Rational(1, static_cast<long long>(states.size())));
    Game skeleton = Game::create(states, uniform, actions, zeros);

    std::vector<Mat> payoffs(states.size(),
                             Mat(num_joint, Vec(actions.size())));
    std::vector<std::vector<bool>> seen(states.size(),
                                        std::vector<bool>(num_joint, false));
    for (const auto& [state_name, row] : doc.at("payoffs").items()) {
      auto w = skeleton.find_state(state_name);
      if (!w) throw ParseError("unknown state in payoffs: " + state_name);
      for (const auto& [label, uvec] : row.items()) {
        auto a = skeleton.find_joint_label(label);
        if (!a) throw ParseError("unknown joint action: " + label);
        if (uvec.size() != actions.size()) {
          throw ParseError("payoff vector length mismatch at " + label);
        }
        Vec u;
        for (const auto& x : uvec) u.push_back(rational_from(x));
        payoffs[*w][*a] = std::move(u);
        seen[*w][*a] = true;
      }
    }
    for (std::size_t w = 0; w < states.size(); ++w) {
      for (int a = 0; a < num_joint; ++a) {
        if (!seen[w][a]) {
          throw ParseError("payoff tensor not total: missing " + states[w] +
                           " / " + skeleton.joint_label(a));
        }
      }
    }
    return Game::create(std::move(states), std::move(prior),
                        std::move(actions), std::move(payoffs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad game document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad game document: ") + e.what());
  }
}

std::string game_to_json(const Game& game) {
  json obj;
  obj["players"] = game.players();
  obj["states"] = game.states();
  obj["prior"] = vec_to(game.prior());
  obj["actions"] = game.actions();
  json payoffs = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    json row = json::object();
    for (int a = 0; a < game.num_joint(); ++a) {
      row[game.joint_label(a)] = vec_to(game.payoff(w, a));
    }
    payoffs[game.states()[w]] = std::move(row);
  }
  obj["payoffs"] = std::move(payoffs);
  return dump(obj);
}

Outcome outcome_from_json(const Game& game, const std::string& text) {
  json doc = parse_document(text);
  try {
    Mat rows(game.num_states(), Vec(game.num_joint(), Rational(0)));
    for (const auto& [state_name, row] : doc.items()) {
      auto w = game.find_state(state_name);
      if (!w) throw ParseError("unknown state in outcome: " + state_name);
      for (const auto& [label, prob] : row.items()) {
        auto a = game.find_joint_label(label);
        if (!a) throw ParseError("unknown joint action: " + label);
        rows[*w][*a] = rational_from(prob);
      }
    }
    return Outcome::create(std::move(rows));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad outcome document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad outcome document: ") + e.what());
  }
}

std::string outcome_to_json(const Game& game, const Outcome& outcome) {
  return dump(outcome_to(game, outcome));
}

cheaptalk::CheapTalkProfile profile_from_json(
    const persuasion::SenderReceiverGame& game, const std::string& text) {
  json doc = parse_document(text);
  try {
    cheaptalk::CheapTalkProfile profile;
    profile.messages = doc.at("messages").get<std::vector<std::string>>();
    auto message_index = [&profile](const std::string& m) {
      for (std::size_t i = 0; i < profile.messages.size(); ++i) {
        if (profile.messages[i] == m) return static_cast<int>(i);
      }
      throw ParseError("unknown message: " + m);
    };
    auto action_index = [&game](const std::string& a) {
      for (int i = 0; i < game.num_actions(); ++i) {
        if (game.action_names()[i] == a) return i;
      }
      throw ParseError("unknown action: " + a);
    };
    profile.sender.assign(game.num_states(),
                          Vec(profile.messages.size(), Rational(0)));
    for (const auto& [state_name, row] : doc.at("sender").items()) {
      auto w = game.game().find_state(state_name);
      if (!w) throw ParseError("unknown state in profile: " + state_name);
      for (const auto& [m, prob] : row.items()) {
        profile.sender[*w][message_index(m)] = rational_from(prob);
      }
    }
    profile.receiver.assign(profile.messages.size(),
                            Vec(game.num_actions(), Rational(0)));
    for (const auto& [m, row] : doc.at("receiver").items()) {
      int mi = message_index(m);
      for (const auto& [a, prob] : row.items()) {
        profile.receiver[mi][action_index(a)] = rational_from(prob);
      }
    }
    profile.validate(game);
    return profile;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad profile document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad profile document: ") + e.what());
  }
}

std::string profile_to_json(const persuasion::SenderReceiverGame& game,
                            const cheaptalk::CheapTalkProfile& profile) {
  json obj;
  obj["messages"] = profile.messages;
  json sender = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    json row = json::object();
    for (std::size_t m = 0; m < profile.messages.size(); ++m) {
      if (!profile.sender[w][m].is_zero()) {
        row[profile.messages[m]] = rational_to(profile.sender[w][m]);
      }
    }
    sender[game.game().states()[w]] = std::move(row);
  }
  obj["sender"] = std::move(sender);
  json receiver = json::object();
  for (std::size_t m = 0; m < profile.messages.size(); ++m) {
    json row = json::object();
    for (int a = 0; a < game.num_actions(); ++a) {
      if (!profile.receiver[m][a].is_zero()) {
        row[game.action_names()[a]] = rational_to(profile.receiver[m][a]);
      }
    }
    receiver[profile.messages[m]] = std::move(row);
  }
  obj["receiver"] = std::move(receiver);
  return dump(obj);
}

allocation::AllocationInstance instance_from_json(const std::string& text) {
  json doc = parse_document(text);
  try {
    std::vector<std::vector<std::string>> types;
    for (const auto& ts : doc.at("types")) {
      types.push_back(ts.get<std::vector<std::string>>());
    }
    if (doc.contains("agents") &&
        doc.at("agents").get<int>() != static_cast<int>(types.size())) {
      throw ParseError("agents field disagrees with the type lists");
    }
    int ns = 1;
    for (const auto& ts : types) ns *= static_cast<int>(ts.size());

    auto state_index = [&types, ns](const std::string& label) {
      // Labels are comma-joined type names in agent order.
      std::vector<std::string> parts;
      std::string cur;
      for (char ch : label) {
        if (ch == ',') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
      parts.push_back(cur);
      if (parts.size() != types.size()) {
        throw ParseError("bad type profile label: " + label);
      }
      int s = 0;
      for (std::size_t i = 0; i < types.size(); ++i) {
        auto it = std::find(types[i].begin(), types[i].end(), parts[i]);
        if (it == types[i].end()) {
          throw ParseError("unknown type in label: " + label);
        }
        s = s * static_cast<int>(types[i].size()) +
            static_cast<int>(it - types[i].begin());
      }
      if (s < 0 || s >= ns) throw ParseError("bad label: " + label);
      return s;
    };

    Vec prior(ns, Rational(0));
    for (const auto& [label, p] : doc.at("prior").items()) {
      prior[state_index(label)] = rational_from(p);
    }
    Mat values(ns, Vec(types.size(), Rational(0)));
    std::vector<bool> seen(ns, false);
    for (const auto& [label, row] : doc.at("values").items()) {
      int s = state_index(label);
      if (row.size() != types.size()) {
        throw ParseError("value vector length mismatch at " + label);
      }
      for (std::size_t i = 0; i < types.size(); ++i) {
        values[s][i] = rational_from(row[i]);
      }
      seen[s] = true;
    }
    for (int s = 0; s < ns; ++s) {
      if (!seen[s]) throw ParseError("values missing a type profile");
    }
    return allocation::AllocationInstance::create(
        std::move(types), std::move(prior), std::move(values),
        rational_from(doc.at("t")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad instance document: ") + e.what());
  }
}

std::string instance_to_json(const allocation::AllocationInstance& instance) {
  json obj;
  obj["agents"] = instance.agents();
  obj["types"] = instance.type_sets();
  json prior = json::object(), values = json::object();
  for (int s = 0; s < instance.num_states(); ++s) {
    prior[instance.state_label(s)] = rational_to(instance.prior()[s]);
    json row = json::array();
    for (int i = 0; i < instance.agents(); ++i) {
      row.push_back(rational_to(instance.value(s, i)));
    }
    values[instance.state_label(s)] = std::move(row);
  }
  obj["prior"] = std::move(prior);
  obj["values"] = std::move(values);
  obj["t"] = rational_to(instance.t());
  return dump(obj);
}

std::string certificate_to_json(const Game& game,
                                const efficiency::EfficiencyReport& report,
                                const efficiency::CountingReport& counting) {
  return dump(certificate_to(game, report, counting));
}

std::string certificates_to_json(
    const Game& game,
    const std::vector<efficiency::EfficiencyReport>& reports,
    const efficiency::CountingReport& counting) {
  json arr = json::array();
  for (const auto& rep : reports) {
    arr.push_back(certificate_to(game, rep, counting));
  }
  return dump(arr);
}

std::string counting_to_json(const efficiency::CountingReport& counting) {
  return dump(counting_to(counting));
}

std::string bp_to_json(const persuasion::SenderReceiverGame& game,
                       const Vec& prior, const persuasion::BpSolution& bp,
                       const std::optional<Rational>& cav_value) {
  json obj;
  obj["prior"] = vec_to(prior);
  obj["sender_value"] = rational_to(bp.sender_value);
  obj["receiver_value"] = rational_to(bp.receiver_value);
  obj["outcome"] = outcome_to(game.game(), bp.policy);
  json posts = json::object();
  for (int a = 0; a < game.num_actions(); ++a) {
    if (!bp.posteriors[a]) continue;
    json q = json::object();
    for (int w = 0; w < game.num_states(); ++w) {
      q[game.game().states()[w]] = rational_to((*bp.posteriors[a])[w]);
    }
    posts[game.action_names()[a]] = std::move(q);
  }
  obj["posteriors"] = std::move(posts);
  json active = json::array();
  for (const auto& [a, b] : bp.active_obedience) {
    active.push_back(
        json::array({game.action_names()[a], game.action_names()[b]}));
  }
  obj["active_obedience"] = std::move(active);
  if (cav_value) {
    obj["concave_envelope_value"] = rational_to(*cav_value);
    obj["concave_envelope_agrees"] = *cav_value == bp.sender_value;
  }
  return dump(obj);
}

std::string pbe_report_to_json(
    const persuasion::SenderReceiverGame& game,
    const cheaptalk::CheapTalkProfile& profile,
    const cheaptalk::PbeReport& report,
    const std::optional<cheaptalk::EfficiencyPredicates>& predicates) {
  json obj;
  obj["is_equilibrium"] = report.is_equilibrium;
  obj["sender_value"] = rational_to(report.sender_value);
  json slacks = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    slacks[game.game().states()[w]] = rational_to(report.sender_slacks[w]);
  }
  obj["sender_slacks"] = std::move(slacks);
  json posts = json::object(), rok = json::object();
  for (std::size_t m = 0; m < profile.messages.size(); ++m) {
    if (!report.posteriors[m]) continue;
    json q = json::object();
    for (int w = 0; w < game.num_states(); ++w) {
      q[game.game().states()[w]] = rational_to((*report.posteriors[m])[w]);
    }
    posts[profile.messages[m]] = std::move(q);
    rok[profile.messages[m]] = static_cast<bool>(report.receiver_ok[m]);
  }
  obj["posteriors"] = std::move(posts);
  obj["receiver_best_response"] = std::move(rok);
  obj["induced_outcome"] = outcome_to(game.game(), report.induced);
  if (predicates) {
    json pred;
    pred["stochastic"] = predicates->stochastic;
    pred["generically_inefficient"] =
        predicates->generically_inefficient;
    if (predicates->pure_favorite_efficient.has_value()) {
      pred["pure_favorite_efficient"] = *predicates->pure_favorite_efficient;
      pred["favorite_is_global"] = predicates->favorite_is_global;
    }
    pred["cone_verdict"] =
        predicates->cone.efficient() ? "efficient" : "inefficient";
    obj["predicates"] = std::move(pred);
  }
  return dump(obj);
}

std::string cheaptalk_analysis_to_json(
    const persuasion::SenderReceiverGame& game,
    const cheaptalk::SenderBestFeasible& best,
    const std::optional<persuasion::ValueFunction>& value,
    const std::optional<StepFn>& quasicav,
    const std::optional<PiecewiseLinear>& cav) {
  json obj;
  json feas = json::array();
  for (int a : best.feasible_actions) {
    feas.push_back(game.action_names()[a]);
  }
  obj["feasible_best_responses"] = std::move(feas);
  obj["sender_best_action"] = game.action_names()[best.best_action];
  if (value) {
    json vf;
    vf["breaks"] = vec_to(value->breaks);
    json pieces = json::array();
    for (const auto& piece : value->pieces) {
      json pj;
      pj["constant"] = rational_to(piece.c0);
      pj["slope"] = rational_to(piece.c1);
      json am = json::array();
      for (int a : piece.argmax) am.push_back(game.action_names()[a]);
      pj["receiver_argmax"] = std::move(am);
      pj["chosen"] = game.action_names()[piece.chosen];
      pieces.push_back(std::move(pj));
    }
    vf["pieces"] = std::move(pieces);
    vf["point_values"] = vec_to(value->point_values);
    obj["value_function"] = std::move(vf);
  }
  if (quasicav) {
    json q;
    q["breaks"] = vec_to(quasicav->breaks);
    q["interval_values"] = vec_to(quasicav->interval_values);
    q["point_values"] = vec_to(quasicav->point_values);
    obj["quasiconcave_envelope"] = std::move(q);
  }
  if (cav) {
    json c;
    c["xs"] = vec_to(cav->xs);
    c["ys"] = vec_to(cav->ys);
    obj["concave_envelope"] = std::move(c);
  }
  return dump(obj);
}

std::string allocation_report_to_json(
    const allocation::AllocationInstance& instance,
    const allocation::MechanismOutcome& mech,
    const allocation::DicReport& dic,
    const allocation::InefficiencyReport& inefficiency,
    const std::vector<allocation::InefficiencyReport>& random_draws) {
  json obj;
  obj["t"] = rational_to(instance.t());
  json per_state = json::object();
  Game embedded = allocation::embed_as_game(instance);
  for (int s = 0; s < instance.num_states(); ++s) {
    json st;
    st["peer_values"] = vec_to(mech.diagnostics.peer_values[s]);
    st["ranks"] = vec_to(mech.diagnostics.ranks[s]);
    st["robust_ranks"] = vec_to(mech.diagnostics.robust_ranks[s]);
    st["informational_size"] =
        rational_to(mech.diagnostics.informational_size[s]);
    json elig = json::array();
    for (bool e : mech.diagnostics.eligible[s]) elig.push_back(e);
    st["eligible"] = std::move(elig);
    per_state[instance.state_label(s)] = std::move(st);
  }
  obj["diagnostics"] = std::move(per_state);
  obj["outcome"] = outcome_to(embedded, mech.outcome);
  json dj;
  dj["holds"] = dic.holds;
  json viols = json::array();
  for (const auto& v : dic.violations) {
    json vj;
    vj["agent"] = v.agent + 1;
    vj["state"] = instance.state_label(v.state);
    vj["misreport"] = instance.type_sets()[v.agent][v.misreport];
    vj["truthful"] = rational_to(v.truthful);
    vj["deviating"] = rational_to(v.deviating);
    viols.push_back(std::move(vj));
  }
  dj["violations"] = std::move(viols);
  obj["dic"] = std::move(dj);

  auto inefficiency_to = [](const allocation::InefficiencyReport& rep) {
    json pj;
    pj["assumptions_hold"] = rep.assumptions_hold;
    pj["assumption_failures"] = rep.assumption_failures;
    if (rep.counting) pj["counting"] = counting_to(*rep.counting);
    pj["all_states_randomize"] = rep.all_states_randomize;
    if (rep.cone) {
      pj["cone_verdict"] = rep.cone->efficient() ? "efficient" : "inefficient";
    }
    return pj;
  };
  obj["inefficiency"] = inefficiency_to(inefficiency);
  if (!random_draws.empty()) {
    json draws = json::array();
    int inefficient = 0;
    for (const auto& rep : random_draws) {
      draws.push_back(inefficiency_to(rep));
      if (rep.cone && !rep.cone->efficient()) ++inefficient;
    }
    obj["random_value_draws"] = std::move(draws);
    obj["random_value_draws_inefficient"] = inefficient;
  }
  return dump(obj);
}

std::string figure_to_json(const Game& game,
                           const geometry2d::FigureBundle& bundle) {
  json obj;
  json sets = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    sets[game.states()[w]] = polygon_to(bundle.state_sets[w]);
  }
  obj["state_sets"] = std::move(sets);
  obj["ex_ante_set"] = polygon_to(bundle.ex_ante_set);
  json pts = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    pts[game.states()[w]] = vec2_to(bundle.state_points[w]);
  }
  obj["state_points"] = std::move(pts);
  obj["ex_ante_point"] = vec2_to(bundle.ex_ante_point);
  json cones = json::object();
  for (int w = 0; w < game.num_states(); ++w) {
    cones[game.states()[w]] = cone_at_point_to(bundle.state_cones[w]);
  }
  obj["state_cones"] = std::move(cones);
  obj["ex_ante_cone"] = cone_at_point_to(bundle.ex_ante_cone);
  obj["common_positive_normal"] = bundle.common_positive_normal;
  return dump(obj);
}

std::string threshold_env_to_json(const persuasion::ThresholdEnv& env) {
  json obj;
  obj["n"] = env.n;
  obj["T"] = rational_to(env.threshold);
  obj["sender_payoffs"] = vec_to(env.sender_payoffs);
  json outer = json::object();
  for (std::size_t i = 0; i < env.outer_labels.size(); ++i) {
    outer[env.outer_labels[i]] = vec_to(env.outer_points[i]);
  }
  obj["outer_points"] = std::move(outer);
  json planes = json::array();
  for (const auto& [h, c] : env.hyperplanes) {
    json pj;
    pj["h"] = vec_to(h);
    pj["c"] = rational_to(c);
    planes.push_back(std::move(pj));
  }
  obj["hyperplanes"] = std::move(planes);
  obj["game"] = json::parse(game_to_json(env.realized.game()));
  return dump(obj);
}

std::string region_report_to_json(const persuasion::RegionReport& region) {
  json obj;
  obj["in_region"] = region.in_region;
  obj["in_region_strict"] = region.in_region_strict;
  obj["in_r_star"] = region.in_r_star;
  obj["in_r_star_strict"] = region.in_r_star_strict;
  obj["projection"] = vec_to(region.projection);
  obj["i_star"] = region.i_star;
  obj["j_star"] = region.j_star;
  obj["T_p"] = rational_to(region.t_p);
  obj["threshold_exceeds_T_p"] = region.threshold_exceeds_tp;
  return dump(obj);
}

std::string threshold_report_to_json(const persuasion::ThresholdEnv& env,
                           const Vec& prior,
                           const persuasion::ThresholdInefficiencyReport& report) {
  json obj;
  obj["prior"] = vec_to(prior);
  obj["region"] = json::parse(region_report_to_json(report.region));
  obj["applicable"] = report.applicable;
  if (report.bp) {
    obj["bp"] = json::parse(
        bp_to_json(env.realized, prior, *report.bp, std::nullopt));
    obj["mixed"] = report.mixed;
    obj["counting"] = counting_to(*report.counting);
    obj["cone_verdict"] =
        report.cone->efficient() ? "efficient" : "inefficient";
    const char* split = nullptr;
    switch (*report.support_case) {
      case persuasion::SupportCase::kThreeInSafeState:
        split = "three actions in the safe state";
        break;
      case persuasion::SupportCase::kMixedRiskyStates:
        split = "mixing in two risky states";
        break;
      case persuasion::SupportCase::kOtherMixed:
        split = "other mixed pattern";
        break;
    }
    obj["support_case"] = split;
  }
  return dump(obj);
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, int num_states) {
  std::ostringstream out;
  for (int w = 0; w < num_states; ++w) out << "prior_" << w << ",";
  out << "sender_value,";
  for (int w = 0; w < num_states; ++w) out << "support_" << w << ",";
  out << "bound_passes,cone_verdict,in_r_star,T_p\n";
  for (const auto& row : rows) {
    for (const auto& p : row.prior) out << p.str() << ",";
    out << row.sender_value.str() << ",";
    for (int s : row.support_sizes) out << s << ",";
    out << (row.bound_passes ? "pass" : "fail") << ",";
    out << (row.cone_efficient ? "efficient" : "inefficient") << ",";
    if (row.in_r_star) {
      out << (*row.in_r_star ? "yes" : "no");
    }
    out << ",";
    if (row.t_p) out << row.t_p->str();
    out << "\n";
  }
  return out.str();
}

}  // namespace effgames::io
