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

#ifndef PR2_CONFIG_H_
#define PR2_CONFIG_H_

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "pr2/ddpg.h"
#include "pr2/matrix_game.h"
#include "pr2/pr2ac.h"
#include "pr2/pr2q.h"
#include "pr2/sga.h"

namespace pr2 {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GameId { kMatrix, kMaxOfTwoQuadratic };
enum class LearnerId { kPr2q, kPr2ac, kIga, kDdpgLite, kDdpgOm, kSga };

std::string GameName(GameId id);
std::string LearnerName(LearnerId id);
GameId ParseGameId(const std::string& name);
LearnerId ParseLearnerId(const std::string& name);
const std::vector<LearnerId>& AllLearners();
bool IsDiscreteLearner(LearnerId id);
// IGA and SGA move the joint strategy and must control every agent.
bool IsJointLearner(LearnerId id);

struct Pr2qConfig {
  Pr2qOptions options;
  // Linear schedule for beta from options.beta on the first iteration to
  // beta_end on the last. Equal values disable annealing.
  double beta_end = 0.5;
};

struct IgaConfig {
  double step_size = 0.01;
  double init_p = 0.9;
  double init_q = 0.9;
};

struct SgaConfig {
  SgaOptions options;
  std::array<double, 2> init = {0.0, 0.0};
};

struct CriteriaConfig {
  double matrix_tolerance = 0.05;
  double matrix_required_fraction = 0.9;
  double global_radius = 1.0;
  double global_min_reward = 9.0;
  double global_required_fraction = 0.7;
  double local_max_reward = 0.5;
  double local_required_fraction = 0.7;
  int rotation_early_iteration = 100;
  double rotation_min_ratio = 0.8;
};

struct ExperimentConfig {
  std::string name = "experiment";
  GameId game = GameId::kMatrix;
  std::vector<LearnerId> learners = {LearnerId::kPr2q, LearnerId::kPr2q};
  int iterations = 500;
  int steps_per_iteration = 1;
  std::vector<std::uint64_t> seeds;
  double gamma = 0.0;
  std::optional<Payoff2x2> r1;
  std::optional<Payoff2x2> r2;
  bool record_wall_time = false;
  Pr2qConfig pr2q;
  Pr2acOptions pr2ac;
  DdpgOptions ddpg;
  IgaConfig iga;
  SgaConfig sga;
  CriteriaConfig criteria;

  // Throws ConfigError.
  void Validate() const;
};

// Game-appropriate defaults: 500 x 1 on the matrix game with gamma 0, and
// 350 x 25 on the differential game with gamma 0.9.
ExperimentConfig DefaultConfig(GameId game, LearnerId learner);

// Strict parsing: unknown keys and ill-typed values raise ConfigError.
ExperimentConfig ParseConfig(const nlohmann::json& j);
ExperimentConfig ParseConfigText(const std::string& text);
ExperimentConfig LoadConfig(const std::string& path);
// Complete serialization; ParseConfig(ToJson(c)) reproduces c.
nlohmann::json ToJson(const ExperimentConfig& config);

}  // namespace pr2

#endif  // PR2_CONFIG_H_
