// Copyright 2026 The pr2-marl Authors
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

#include "pr2/config.h"

#include <fstream>
#include <set>
#include <sstream>

namespace pr2 {
namespace {

using json = nlohmann::json;

// Reads the keys of one JSON object and rejects any that were not read.
class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw ConfigError(Where() + " must be an object");
  }

  bool Has(const char* key) const { return j_.contains(key); }

  const json& Raw(const char* key) {
    seen_.insert(key);
    return j_.at(key);
  }

  void Get(const char* key, double& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_number()) throw ConfigError(Where(key) + " must be a number");
    out = v.get<double>();
  }
  void Get(const char* key, int& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_number_integer()) {
      throw ConfigError(Where(key) + " must be an integer");
    }
    out = v.get<int>();
  }
  void Get(const char* key, std::int64_t& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_number_integer()) {
      throw ConfigError(Where(key) + " must be an integer");
    }
    out = v.get<std::int64_t>();
  }
  void Get(const char* key, std::size_t& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
      throw ConfigError(Where(key) + " must be a nonnegative integer");
    }
    out = v.get<std::size_t>();
  }
  void Get(const char* key, bool& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_boolean()) throw ConfigError(Where(key) + " must be a boolean");
    out = v.get<bool>();
  }
  void Get(const char* key, std::string& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_string()) throw ConfigError(Where(key) + " must be a string");
    out = v.get<std::string>();
  }
  void Get(const char* key, std::vector<int>& out) {
    if (!Has(key)) return;
    const json& v = Raw(key);
    if (!v.is_array()) throw ConfigError(Where(key) + " must be an array");
    out.clear();
    for (const json& e : v) {
      if (!e.is_number_integer()) {
        throw ConfigError(Where(key) + " must hold integers");
      }
      out.push_back(e.get<int>());
    }
  }

  void Finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!seen_.count(it.key())) {
        throw ConfigError("unknown key '" + Where(it.key().c_str()) + "'");
      }
    }
  }

  std::string Where(const char* key = nullptr) const {
    if (key == nullptr) return path_.empty() ? "config" : path_;
    return path_.empty() ? std::string(key) : path_ + "." + key;
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> seen_;
};

Payoff2x2 ReadPayoff(const json& v, const std::string& where) {
  Payoff2x2 m{};
  if (!v.is_array() || v.size() != 2) {
    throw ConfigError(where + " must be a 2x2 array");
  }
  for (int a = 0; a < 2; ++a) {
    if (!v[a].is_array() || v[a].size() != 2) {
      throw ConfigError(where + " must be a 2x2 array");
    }
    for (int b = 0; b < 2; ++b) {
      if (!v[a][b].is_number()) throw ConfigError(where + " must hold numbers");
      m[a][b] = v[a][b].get<double>();
    }
  }
  return m;
}

json PayoffJson(const Payoff2x2& m) {
  return json::array({json::array({m[0][0], m[0][1]}),
                      json::array({m[1][0], m[1][1]})});
}

void ReadPr2q(ObjectReader& r, Pr2qConfig& c) {
  r.Get("learning_rate", c.options.learning_rate);
  r.Get("beta", c.options.beta);
  r.Get("beta_end", c.beta_end);
  r.Get("greedy", c.options.greedy);
  std::string model = OpponentModelName(c.options.opponent_model);
  r.Get("opponent_model", model);
  try {
    c.options.opponent_model = ParseOpponentModel(model);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(r.Where("opponent_model") + ": " + e.what());
  }
}

void ReadExploration(ObjectReader& r, ExplorationSchedule& e) {
  r.Get("exploration_noise", e.scale);
  r.Get("exploration_steps", e.steps);
}

void ReadPr2ac(ObjectReader& r, Pr2acOptions& o) {
  r.Get("hidden", o.hidden);
  r.Get("particles", o.particles);
  r.Get("batch_size", o.batch_size);
  r.Get("replay_capacity", o.replay_capacity);
  r.Get("critic_lr", o.critic_lr);
  r.Get("actor_lr", o.actor_lr);
  r.Get("sampler_lr", o.sampler_lr);
  r.Get("target_rate", o.target_rate);
  ReadExploration(r, o.exploration);
  r.Get("temperature", o.temperature);
  r.Get("actor_output_scale", o.actor_output_scale);
}

void ReadDdpg(ObjectReader& r, DdpgOptions& o) {
  r.Get("hidden", o.hidden);
  r.Get("batch_size", o.batch_size);
  r.Get("replay_capacity", o.replay_capacity);
  r.Get("critic_lr", o.critic_lr);
  r.Get("actor_lr", o.actor_lr);
  r.Get("predictor_lr", o.predictor_lr);
  r.Get("target_rate", o.target_rate);
  ReadExploration(r, o.exploration);
  r.Get("actor_output_scale", o.actor_output_scale);
}

void ReadIga(ObjectReader& r, IgaConfig& c) {
  r.Get("step_size", c.step_size);
  r.Get("init_p", c.init_p);
  r.Get("init_q", c.init_q);
}

void ReadSga(ObjectReader& r, SgaConfig& c) {
  r.Get("step_size", c.options.step_size);
  r.Get("adjustment", c.options.adjustment);
  r.Get("fd_step", c.options.fd_step);
  if (r.Has("init")) {
    const json& v = r.Raw("init");
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
        !v[1].is_number()) {
      throw ConfigError(r.Where("init") + " must be two numbers");
    }
    c.init = {v[0].get<double>(), v[1].get<double>()};
  }
}

void ReadCriteria(ObjectReader& r, CriteriaConfig& c) {
  r.Get("matrix_tolerance", c.matrix_tolerance);
  r.Get("matrix_required_fraction", c.matrix_required_fraction);
  r.Get("global_radius", c.global_radius);
  r.Get("global_min_reward", c.global_min_reward);
  r.Get("global_required_fraction", c.global_required_fraction);
  r.Get("local_max_reward", c.local_max_reward);
  r.Get("local_required_fraction", c.local_required_fraction);
  r.Get("rotation_early_iteration", c.rotation_early_iteration);
  r.Get("rotation_min_ratio", c.rotation_min_ratio);
}

template <typename Fn>
void Section(ObjectReader& top, const char* key, Fn&& fn) {
  if (!top.Has(key)) return;
  ObjectReader r(top.Raw(key), key);
  fn(r);
  r.Finish();
}

json ExplorationJson(const ExplorationSchedule& e, json j) {
  j["exploration_noise"] = e.scale;
  j["exploration_steps"] = e.steps;
  return j;
}

}  // namespace

std::string GameName(GameId id) {
  return id == GameId::kMatrix ? "matrix" : "max_of_two_quadratic";
}

std::string LearnerName(LearnerId id) {
  switch (id) {
    case LearnerId::kPr2q:
      return "pr2q";
    case LearnerId::kPr2ac:
      return "pr2ac";
    case LearnerId::kIga:
      return "iga";
    case LearnerId::kDdpgLite:
      return "ddpg_lite";
    case LearnerId::kDdpgOm:
      return "ddpg_om";
    case LearnerId::kSga:
      return "sga";
  }
  return "unknown";
}

GameId ParseGameId(const std::string& name) {
  if (name == "matrix") return GameId::kMatrix;
  if (name == "max_of_two_quadratic") return GameId::kMaxOfTwoQuadratic;
  throw ConfigError("unknown game '" + name +
                    "' (expected matrix or max_of_two_quadratic)");
}

LearnerId ParseLearnerId(const std::string& name) {
  for (LearnerId id : AllLearners()) {
    if (LearnerName(id) == name) return id;
  }
  throw ConfigError("unknown learner '" + name + "'");
}

const std::vector<LearnerId>& AllLearners() {
  static const std::vector<LearnerId> kAll = {
      LearnerId::kPr2q,     LearnerId::kPr2ac,  LearnerId::kIga,
      LearnerId::kDdpgLite, LearnerId::kDdpgOm, LearnerId::kSga};
  return kAll;
}

bool IsDiscreteLearner(LearnerId id) {
  return id == LearnerId::kPr2q || id == LearnerId::kIga;
}

bool IsJointLearner(LearnerId id) {
  return id == LearnerId::kIga || id == LearnerId::kSga;
}

void ExperimentConfig::Validate() const {
  if (learners.size() != 2) {
    throw ConfigError("learners must name exactly two agents");
  }
  const bool discrete_game = game == GameId::kMatrix;
  for (LearnerId id : learners) {
    if (IsDiscreteLearner(id) != discrete_game) {
      throw ConfigError("learner '" + LearnerName(id) +
                        "' cannot play game '" + GameName(game) + "'");
    }
    if (IsJointLearner(id) && (learners[0] != id || learners[1] != id)) {
      throw ConfigError("learner '" + LearnerName(id) +
                        "' must control both agents");
    }
  }
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (steps_per_iteration < 1) {
    throw ConfigError("steps_per_iteration must be >= 1");
  }
  std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
  if (unique.size() != seeds.size()) throw ConfigError("seeds must be distinct");
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw ConfigError("gamma must lie in [0, 1)");
  }
  if ((r1 || r2) && game != GameId::kMatrix) {
    throw ConfigError("payoffs apply to the matrix game only");
  }
  if (name.empty() || name.find_first_of("/\\") != std::string::npos) {
    throw ConfigError("name must be a nonempty file-name-safe string");
  }
  try {
    Pr2qOptions q = pr2q.options;
    q.gamma = gamma;
    q.Validate();
    Pr2acOptions ac = pr2ac;
    ac.gamma = gamma;
    ac.Validate();
    DdpgOptions d = ddpg;
    d.gamma = gamma;
    d.Validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!(pr2q.beta_end >= 0.0)) throw ConfigError("pr2q.beta_end must be >= 0");
  if (!(iga.init_p >= 0.0 && iga.init_p <= 1.0 && iga.init_q >= 0.0 &&
        iga.init_q <= 1.0)) {
    throw ConfigError("iga initial strategies must lie in [0, 1]");
  }
  if (!(iga.step_size > 0.0)) throw ConfigError("iga.step_size must be > 0");
  if (!(sga.options.step_size > 0.0 && sga.options.fd_step > 0.0)) {
    throw ConfigError("sga step sizes must be > 0");
  }
  for (double a : sga.init) {
    if (!(a >= sga.options.lo && a <= sga.options.hi)) {
      throw ConfigError("sga.init must lie inside the action interval");
    }
  }
}

ExperimentConfig DefaultConfig(GameId game, LearnerId learner) {
  ExperimentConfig c;
  c.game = game;
  c.learners = {learner, learner};
  c.name = GameName(game) + "_" + LearnerName(learner);
  if (game == GameId::kMatrix) {
    c.iterations = 500;
    c.steps_per_iteration = 1;
    c.gamma = 0.0;
  } else {
    c.iterations = 350;
    c.steps_per_iteration = 25;
    c.gamma = 0.9;
  }
  return c;
}

ExperimentConfig ParseConfig(const json& j) {
  ObjectReader top(j, "");
  if (!top.Has("game") || !top.Has("learners")) {
    throw ConfigError("config requires 'game' and 'learners'");
  }
  std::string game_name;
  top.Get("game", game_name);
  const GameId game = ParseGameId(game_name);
  const json& lj = top.Raw("learners");
  if (!lj.is_array()) throw ConfigError("learners must be an array");
  std::vector<LearnerId> learners;
  for (const json& e : lj) {
    if (!e.is_string()) throw ConfigError("learners must hold strings");
    learners.push_back(ParseLearnerId(e.get<std::string>()));
  }
  if (learners.empty()) throw ConfigError("learners must not be empty");
  ExperimentConfig c = DefaultConfig(game, learners.front());
  c.learners = learners;
  top.Get("name", c.name);
  top.Get("iterations", c.iterations);
  top.Get("steps_per_iteration", c.steps_per_iteration);
  top.Get("gamma", c.gamma);
  top.Get("record_wall_time", c.record_wall_time);
  if (top.Has("seeds")) {
    const json& sj = top.Raw("seeds");
    if (!sj.is_array()) throw ConfigError("seeds must be an array");
    for (const json& e : sj) {
      if (!e.is_number_unsigned()) {
        throw ConfigError("seeds must be nonnegative integers");
      }
      c.seeds.push_back(e.get<std::uint64_t>());
    }
  }
  Section(top, "payoffs", [&](ObjectReader& r) {
    if (r.Has("r1")) c.r1 = ReadPayoff(r.Raw("r1"), "payoffs.r1");
    if (r.Has("r2")) c.r2 = ReadPayoff(r.Raw("r2"), "payoffs.r2");
  });
  Section(top, "pr2q", [&](ObjectReader& r) { ReadPr2q(r, c.pr2q); });
  Section(top, "pr2ac", [&](ObjectReader& r) { ReadPr2ac(r, c.pr2ac); });
  Section(top, "ddpg", [&](ObjectReader& r) { ReadDdpg(r, c.ddpg); });
  Section(top, "iga", [&](ObjectReader& r) { ReadIga(r, c.iga); });
  Section(top, "sga", [&](ObjectReader& r) { ReadSga(r, c.sga); });
  Section(top, "criteria", [&](ObjectReader& r) { ReadCriteria(r, c.criteria); });
  top.Finish();
  c.pr2q.options.gamma = c.gamma;
  c.pr2ac.gamma = c.gamma;
  c.ddpg.gamma = c.gamma;
  c.Validate();
  return c;
}

ExperimentConfig ParseConfigText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what());
  }
  return ParseConfig(j);
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseConfigText(buffer.str());
}

json ToJson(const ExperimentConfig& c) {
  json j;
  j["name"] = c.name;
  j["game"] = GameName(c.game);
  j["learners"] = json::array();
  for (LearnerId id : c.learners) j["learners"].push_back(LearnerName(id));
  j["iterations"] = c.iterations;
  j["steps_per_iteration"] = c.steps_per_iteration;
  j["seeds"] = c.seeds;
  j["gamma"] = c.gamma;
  j["record_wall_time"] = c.record_wall_time;
  if (c.r1 || c.r2) {
    j["payoffs"] = json::object();
    if (c.r1) j["payoffs"]["r1"] = PayoffJson(*c.r1);
    if (c.r2) j["payoffs"]["r2"] = PayoffJson(*c.r2);
  }
  j["pr2q"] = {{"learning_rate", c.pr2q.options.learning_rate},
               {"beta", c.pr2q.options.beta},
               {"beta_end", c.pr2q.beta_end},
               {"greedy", c.pr2q.options.greedy},
               {"opponent_model", OpponentModelName(c.pr2q.options.opponent_model)}};
  j["pr2ac"] = ExplorationJson(
      c.pr2ac.exploration,
      {{"hidden", c.pr2ac.hidden},
       {"particles", c.pr2ac.particles},
       {"batch_size", c.pr2ac.batch_size},
       {"replay_capacity", c.pr2ac.replay_capacity},
       {"critic_lr", c.pr2ac.critic_lr},
       {"actor_lr", c.pr2ac.actor_lr},
       {"sampler_lr", c.pr2ac.sampler_lr},
       {"target_rate", c.pr2ac.target_rate},
       {"temperature", c.pr2ac.temperature},
       {"actor_output_scale", c.pr2ac.actor_output_scale}});
  j["ddpg"] = ExplorationJson(c.ddpg.exploration,
                              {{"hidden", c.ddpg.hidden},
                               {"batch_size", c.ddpg.batch_size},
                               {"replay_capacity", c.ddpg.replay_capacity},
                               {"critic_lr", c.ddpg.critic_lr},
                               {"actor_lr", c.ddpg.actor_lr},
                               {"predictor_lr", c.ddpg.predictor_lr},
                               {"target_rate", c.ddpg.target_rate},
                               {"actor_output_scale", c.ddpg.actor_output_scale}});
  j["iga"] = {{"step_size", c.iga.step_size},
              {"init_p", c.iga.init_p},
              {"init_q", c.iga.init_q}};
  j["sga"] = {{"step_size", c.sga.options.step_size},
              {"adjustment", c.sga.options.adjustment},
              {"fd_step", c.sga.options.fd_step},
              {"init", {c.sga.init[0], c.sga.init[1]}}};
  const CriteriaConfig& k = c.criteria;
  j["criteria"] = {{"matrix_tolerance", k.matrix_tolerance},
                   {"matrix_required_fraction", k.matrix_required_fraction},
                   {"global_radius", k.global_radius},
                   {"global_min_reward", k.global_min_reward},
                   {"global_required_fraction", k.global_required_fraction},
                   {"local_max_reward", k.local_max_reward},
                   {"local_required_fraction", k.local_required_fraction},
                   {"rotation_early_iteration", k.rotation_early_iteration},
                   {"rotation_min_ratio", k.rotation_min_ratio}};
  return j;
}

}  // namespace pr2
