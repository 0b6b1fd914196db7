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

#ifndef PR2_EXPERIMENT_H_
#define PR2_EXPERIMENT_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pr2/actor_critic.h"
#include "pr2/config.h"
#include "pr2/game.h"
#include "pr2/run_record.h"

namespace pr2 {

// Everything one seed produced. `final_point` holds (p, q) on the matrix game
// and the noise-free joint action on the differential game.
struct RunOutcome {
  std::uint64_t seed = 0;
  std::vector<RunRecord> records;
  bool aborted = false;
  std::string reason;
  std::vector<double> final_point;
  double final_reward = 0.0;
  std::optional<double> final_dist_local;
  std::optional<double> final_dist_global;
};

struct ExperimentResult {
  std::vector<RunOutcome> runs;
  nlohmann::json summary;
  std::vector<std::string> warnings;
  // 0 on success, 2 when every run aborted.
  int exit_code = 0;
};

// Decentralized two-agent loop. Each learner receives only its own reward and
// the executed joint action. `on_iteration(it, state)` fires once before the
// first step (it = 0) and after every iteration.
void PlayContinuous(const std::array<ContinuousLearner*, 2>& agents,
                    const Game& game, int iterations, int steps_per_iteration,
                    const std::function<void(int, const State&)>& on_iteration);

// Executes one seed. Learner failures are caught and reported through
// RunOutcome::aborted; the records gathered before the failure are kept.
RunOutcome RunSingle(const ExperimentConfig& config, std::uint64_t seed);

// Runs every seed on a bounded OpenMP pool (`max_threads` <= 0 uses the
// runtime default). When `out_dir` is set, writes run_<seed>.csv per seed and
// summary.json, each atomically.
ExperimentResult RunExperiment(
    const ExperimentConfig& config,
    const std::optional<std::filesystem::path>& out_dir = std::nullopt,
    int max_threads = 0);

// Per-criterion verdicts with measured values.
nlohmann::json EvaluateCriteria(const ExperimentConfig& config,
                                const std::vector<RunOutcome>& runs);
nlohmann::json BuildSummary(const ExperimentConfig& config,
                            const std::vector<RunOutcome>& runs,
                            const std::vector<std::string>& warnings);

}  // namespace pr2

#endif  // PR2_EXPERIMENT_H_
