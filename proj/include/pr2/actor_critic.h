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

#ifndef PR2_ACTOR_CRITIC_H_
#define PR2_ACTOR_CRITIC_H_

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pr2/game.h"
#include "pr2/mlp.h"
#include "pr2/replay_buffer.h"

namespace pr2 {

// One agent's private record of an environment step. Opponent actions are
// observable; opponent rewards are not.
struct AgentExperience {
  State state;
  double own_action = 0.0;
  std::vector<double> opponent_actions;
  double reward = 0.0;
  State next_state;
};

using AgentReplayBuffer = BasicReplayBuffer<AgentExperience>;

// Affine map between an interval and the tanh range [-1, 1].
struct ActionScaler {
  double lo = -1.0;
  double hi = 1.0;

  double Normalize(double a) const { return (a - mid()) / half(); }
  double Denormalize(double u) const { return mid() + half() * u; }
  double mid() const { return 0.5 * (lo + hi); }
  double half() const { return 0.5 * (hi - lo); }
};

// What a continuous learner knows about its game.
struct ContinuousAgentSpec {
  int state_dim = 1;
  ActionScaler own;
  std::vector<ActionScaler> opponents;
};

// Decentralized learner on a continuous action interval. Implementations own
// their random streams, derived from the seed given at construction.
class ContinuousLearner {
 public:
  virtual ~ContinuousLearner() = default;

  virtual std::string name() const = 0;
  // Exploratory action; advances the exploration schedule by one step.
  virtual double Act(const State& state) = 0;
  // Noise-free policy output.
  virtual double PolicyMean(const State& state) const = 0;
  virtual void Observe(const AgentExperience& experience) = 0;
  // One round of parameter updates from the replay buffer. A no-op while
  // the buffer is empty.
  virtual void Learn() = 0;
  // Flat snapshot of every learnable parameter, for checkpoints and audits.
  virtual std::vector<double> Parameters() const = 0;
};

// Gaussian pre-squash noise with a fixed scale for the first `steps` steps
// and none afterwards.
struct ExplorationSchedule {
  double scale = 0.1;
  std::int64_t steps = 1000;

  double At(std::int64_t step) const { return step < steps ? scale : 0.0; }
};

// target <- rate * online + (1 - rate) * target.
void SoftUpdate(std::span<const double> online, std::span<double> target,
                double rate);
void SoftUpdate(const Mlp& online, Mlp& target, double rate);

// Feature columns for a list of states.
Eigen::MatrixXd StateColumns(const std::vector<const State*>& states,
                             int state_dim);

// Repeats every column `times` times in place: [c0 c0 .. c1 c1 ..].
Eigen::MatrixXd RepeatColumns(const Eigen::MatrixXd& m, int times);

// Mean of each consecutive block of `times` columns.
Eigen::MatrixXd BlockMeanColumns(const Eigen::MatrixXd& m, int times);

}  // namespace pr2

#endif  // PR2_ACTOR_CRITIC_H_
