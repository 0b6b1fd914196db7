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

#ifndef PR2_DDPG_H_
#define PR2_DDPG_H_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pr2/actor_critic.h"
#include "pr2/adam.h"
#include "pr2/mlp.h"
#include "pr2/replay_buffer.h"
#include "pr2/rng.h"

namespace pr2 {

struct DdpgOptions {
  std::vector<int> hidden = {100, 100};
  std::size_t batch_size = kDefaultBatchSize;
  std::size_t replay_capacity = kDefaultReplayCapacity;
  double gamma = 0.9;
  double critic_lr = 1e-3;
  double actor_lr = 1e-4;
  double predictor_lr = 1e-3;
  double target_rate = 0.01;
  ExplorationSchedule exploration;
  double actor_output_scale = 0.1;
  // Adds a supervised opponent-action predictor whose output is fed to the
  // critic.
  bool opponent_model = false;

  void Validate() const;
};

// Supervised model of the most recent opponent behaviour: state -> tanh.
class OpponentPredictor {
 public:
  OpponentPredictor() = default;
  OpponentPredictor(int state_dim, int opponent_dim,
                    const std::vector<int>& hidden, double learning_rate,
                    Rng& init_rng);

  // Normalized predictions, one column per state column.
  Eigen::MatrixXd Predict(const Eigen::MatrixXd& states) const;
  // One squared-error step toward normalized targets; returns the loss
  // before the step.
  double Fit(const Eigen::MatrixXd& states, const Eigen::MatrixXd& targets);

  const Mlp& network() const { return net_; }

 private:
  Mlp net_;
  Adam adam_;
};

// Independent deterministic-policy-gradient learner. The critic sees
// (s, a^i), or (s, a^i, predicted a^-i) with the opponent model enabled.
class DdpgAgent : public ContinuousLearner {
 public:
  DdpgAgent(ContinuousAgentSpec spec, DdpgOptions options, std::uint64_t seed);

  std::string name() const override {
    return options_.opponent_model ? "ddpg_om" : "ddpg_lite";
  }
  double Act(const State& state) override;
  double PolicyMean(const State& state) const override;
  void Observe(const AgentExperience& experience) override;
  void Learn() override;
  std::vector<double> Parameters() const override;

  // Returns the critic loss before the step.
  double CriticStep(const std::vector<AgentExperience>& batch);
  void ActorStep(const std::vector<AgentExperience>& batch);
  // Fits the predictor to the newest observed opponent action.
  double PredictorStep();
  void SoftUpdateTargets();

  // Critic input columns for the given states and normalized own actions.
  Eigen::MatrixXd CriticInputs(const Eigen::MatrixXd& states,
                               const Eigen::MatrixXd& own) const;

  const DdpgOptions& options() const { return options_; }
  const Mlp& actor() const { return actor_; }
  const Mlp& critic() const { return critic_; }
  const OpponentPredictor& predictor() const { return predictor_; }
  Mlp& mutable_actor() { return actor_; }
  Mlp& mutable_critic() { return critic_; }
  const AgentReplayBuffer& buffer() const { return buffer_; }

 private:
  int opponent_dim() const { return static_cast<int>(spec_.opponents.size()); }
  Eigen::MatrixXd States(const std::vector<AgentExperience>& batch,
                         bool next) const;

  ContinuousAgentSpec spec_;
  DdpgOptions options_;
  Mlp actor_;
  Mlp critic_;
  Mlp target_actor_;
  Mlp target_critic_;
  OpponentPredictor predictor_;
  Adam actor_adam_;
  Adam critic_adam_;
  AgentReplayBuffer buffer_;
  Rng explore_rng_;
  Rng replay_rng_;
  std::int64_t steps_ = 0;
};

}  // namespace pr2

#endif  // PR2_DDPG_H_
