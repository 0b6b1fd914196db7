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

#ifndef PR2_PR2AC_H_
#define PR2_PR2AC_H_

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "pr2/actor_critic.h"
#include "pr2/adam.h"
#include "pr2/amortized_sampler.h"
#include "pr2/mlp.h"
#include "pr2/replay_buffer.h"
#include "pr2/rng.h"

namespace pr2 {

struct Pr2acOptions {
  std::vector<int> hidden = {100, 100};
  int particles = 32;
  std::size_t batch_size = kDefaultBatchSize;
  std::size_t replay_capacity = kDefaultReplayCapacity;
  double gamma = 0.9;
  double critic_lr = 1e-3;
  double actor_lr = 1e-4;
  double sampler_lr = 1e-4;
  double target_rate = 0.01;
  ExplorationSchedule exploration;
  // Inverse temperature on Q in the opponent sampler's target density.
  double temperature = 0.5;
  double actor_output_scale = 0.1;

  void Validate() const;
};

// Decentralized level-1 recursive reasoning actor-critic for one agent:
// deterministic actor mu(s), joint critic Q(s, a^i, a^-i), and an amortized
// SVGD sampler for rho(a^-i | s, a^i). All networks see actions in
// normalized [-1, 1] coordinates.
class Pr2acAgent : public ContinuousLearner {
 public:
  Pr2acAgent(ContinuousAgentSpec spec, Pr2acOptions options,
             std::uint64_t seed);

  std::string name() const override { return "pr2ac"; }
  double Act(const State& state) override;
  double PolicyMean(const State& state) const override;
  void Observe(const AgentExperience& experience) override;
  void Learn() override;
  std::vector<double> Parameters() const override;

  // Algorithm steps, exposed individually.
  Eigen::VectorXd CriticTarget(const std::vector<AgentExperience>& batch);
  // Returns the mean squared error before the step.
  double CriticStep(const std::vector<AgentExperience>& batch,
                    const Eigen::VectorXd& targets);
  // Returns the gradient of the objective with respect to each normalized
  // own action (one entry per batch row) before the step.
  Eigen::VectorXd ActorStep(const std::vector<AgentExperience>& batch);
  void SamplerStep(const std::vector<AgentExperience>& batch);
  void SoftUpdateTargets();

  // Critic value and its gradient with respect to the opponent coordinates
  // for explicit (state, own, opponent) columns in normalized units.
  Eigen::MatrixXd CriticOpponentGradient(const Eigen::MatrixXd& inputs) const;

  const ContinuousAgentSpec& spec() const { return spec_; }
  const Pr2acOptions& options() const { return options_; }
  const Mlp& actor() const { return actor_; }
  const Mlp& critic() const { return critic_; }
  const Mlp& target_actor() const { return target_actor_; }
  const Mlp& target_critic() const { return target_critic_; }
  const AmortizedSampler& sampler() const { return sampler_; }
  Mlp& mutable_actor() { return actor_; }
  Mlp& mutable_critic() { return critic_; }
  Mlp& mutable_target_actor() { return target_actor_; }
  Mlp& mutable_target_critic() { return target_critic_; }
  AmortizedSampler& mutable_sampler() { return sampler_; }
  const Adam& actor_optimizer() const { return actor_adam_; }
  const Adam& critic_optimizer() const { return critic_adam_; }
  const AgentReplayBuffer& buffer() const { return buffer_; }
  std::int64_t steps() const { return steps_; }

 private:
  int opponent_dim() const { return static_cast<int>(spec_.opponents.size()); }
  Eigen::MatrixXd States(const std::vector<AgentExperience>& batch,
                         bool next) const;
  Eigen::MatrixXd OwnActions(const std::vector<AgentExperience>& batch) const;
  Eigen::MatrixXd OpponentActions(
      const std::vector<AgentExperience>& batch) const;
  // [state; own; opponent] critic inputs with M particles per batch row.
  Eigen::MatrixXd JointInputs(const Eigen::MatrixXd& states,
                              const Eigen::MatrixXd& own,
                              const Eigen::MatrixXd& particles, int m) const;

  ContinuousAgentSpec spec_;
  Pr2acOptions options_;
  Mlp actor_;
  Mlp critic_;
  Mlp target_actor_;
  Mlp target_critic_;
  AmortizedSampler sampler_;
  Adam actor_adam_;
  Adam critic_adam_;
  AgentReplayBuffer buffer_;
  Rng explore_rng_;
  Rng replay_rng_;
  Rng particle_rng_;
  std::int64_t steps_ = 0;
};

}  // namespace pr2

#endif  // PR2_PR2AC_H_
