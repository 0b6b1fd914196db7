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

#include "pr2/pr2ac.h"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "pr2/kernels.h"
#include "pr2/numeric_error.h"

namespace pr2 {

void Pr2acOptions::Validate() const {
  if (particles < 1) throw std::invalid_argument("pr2ac particles must be >= 1");
  if (batch_size < 1) throw std::invalid_argument("pr2ac batch_size must be >= 1");
  if (replay_capacity < 1) {
    throw std::invalid_argument("pr2ac replay_capacity must be >= 1");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("pr2ac gamma must lie in [0, 1)");
  }
  if (!(target_rate > 0.0 && target_rate <= 1.0)) {
    throw std::invalid_argument("pr2ac target_rate must lie in (0, 1]");
  }
  if (!(critic_lr > 0.0 && actor_lr > 0.0 && sampler_lr > 0.0)) {
    throw std::invalid_argument("pr2ac learning rates must be positive");
  }
  if (!(exploration.scale >= 0.0) || exploration.steps < 0) {
    throw std::invalid_argument("pr2ac exploration must be nonnegative");
  }
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("pr2ac temperature must be positive");
  }
}

Pr2acAgent::Pr2acAgent(ContinuousAgentSpec spec, Pr2acOptions options,
                       std::uint64_t seed)
    : spec_(std::move(spec)),
      options_(std::move(options)),
      buffer_(options_.replay_capacity),
      explore_rng_(MakeRng(seed, "explore")),
      replay_rng_(MakeRng(seed, "replay")),
      particle_rng_(MakeRng(seed, "particles")) {
  options_.Validate();
  if (spec_.opponents.empty()) {
    throw std::invalid_argument("pr2ac needs at least one opponent");
  }
  const int s = spec_.state_dim;
  const int o = opponent_dim();
  Rng actor_init = MakeRng(seed, "init.actor");
  Rng critic_init = MakeRng(seed, "init.critic");
  Rng sampler_init = MakeRng(seed, "init.sampler");
  actor_ = Mlp::Uniform(MlpLayout(s, 1, options_.hidden), actor_init,
                        options_.actor_output_scale);
  critic_ = Mlp::Uniform(MlpLayout(s + 1 + o, 1, options_.hidden), critic_init);
  target_actor_ = actor_;
  target_critic_ = critic_;
  sampler_ = AmortizedSampler(s + 1, o, o, options_.hidden, options_.sampler_lr,
                              sampler_init);
  actor_adam_ = Adam(actor_.blocks(), {.learning_rate = options_.actor_lr});
  critic_adam_ = Adam(critic_.blocks(), {.learning_rate = options_.critic_lr});
}

double Pr2acAgent::Act(const State& state) {
  const double sigma = options_.exploration.At(steps_++);
  Eigen::MatrixXd s = StateColumns({&state}, spec_.state_dim);
  double u = actor_.Forward(s)(0, 0);
  if (sigma > 0.0) u += sigma * StandardNormal(explore_rng_);
  return spec_.own.Denormalize(std::tanh(u));
}

double Pr2acAgent::PolicyMean(const State& state) const {
  Eigen::MatrixXd s = StateColumns({&state}, spec_.state_dim);
  return spec_.own.Denormalize(std::tanh(actor_.Forward(s)(0, 0)));
}

void Pr2acAgent::Observe(const AgentExperience& experience) {
  if (static_cast<int>(experience.opponent_actions.size()) != opponent_dim()) {
    throw std::invalid_argument("experience has the wrong opponent count");
  }
  buffer_.Add(experience);
}

void Pr2acAgent::Learn() {
  if (buffer_.empty()) return;
  std::vector<AgentExperience> batch =
      buffer_.Sample(options_.batch_size, replay_rng_);
  Eigen::VectorXd y = CriticTarget(batch);
  CriticStep(batch, y);
  ActorStep(batch);
  SamplerStep(batch);
  SoftUpdateTargets();
}

std::vector<double> Pr2acAgent::Parameters() const {
  std::vector<double> out;
  for (const Mlp* net : {&actor_, &critic_, &target_actor_, &target_critic_,
                         &sampler_.generator()}) {
    out.insert(out.end(), net->parameters().begin(), net->parameters().end());
  }
  return out;
}

Eigen::MatrixXd Pr2acAgent::States(const std::vector<AgentExperience>& batch,
                                   bool next) const {
  std::vector<const State*> states;
  states.reserve(batch.size());
  for (const AgentExperience& e : batch) {
    states.push_back(next ? &e.next_state : &e.state);
  }
  return StateColumns(states, spec_.state_dim);
}

Eigen::MatrixXd Pr2acAgent::OwnActions(
    const std::vector<AgentExperience>& batch) const {
  Eigen::MatrixXd a(1, static_cast<Eigen::Index>(batch.size()));
  for (std::size_t j = 0; j < batch.size(); ++j) {
    a(0, static_cast<Eigen::Index>(j)) = spec_.own.Normalize(batch[j].own_action);
  }
  return a;
}

Eigen::MatrixXd Pr2acAgent::OpponentActions(
    const std::vector<AgentExperience>& batch) const {
  Eigen::MatrixXd a(opponent_dim(), static_cast<Eigen::Index>(batch.size()));
  for (std::size_t j = 0; j < batch.size(); ++j) {
    for (int d = 0; d < opponent_dim(); ++d) {
      a(d, static_cast<Eigen::Index>(j)) =
          spec_.opponents[d].Normalize(batch[j].opponent_actions[d]);
    }
  }
  return a;
}

Eigen::MatrixXd Pr2acAgent::JointInputs(const Eigen::MatrixXd& states,
                                        const Eigen::MatrixXd& own,
                                        const Eigen::MatrixXd& particles,
                                        int m) const {
  const int s = spec_.state_dim;
  Eigen::MatrixXd x(s + 1 + opponent_dim(), particles.cols());
  x.topRows(s) = RepeatColumns(states, m);
  x.row(s) = RepeatColumns(own, m);
  x.bottomRows(opponent_dim()) = particles;
  return x;
}

Eigen::VectorXd Pr2acAgent::CriticTarget(
    const std::vector<AgentExperience>& batch) {
  const int m = options_.particles;
  const Eigen::MatrixXd next_states = States(batch, /*next=*/true);
  const Eigen::MatrixXd next_own =
      target_actor_.Forward(next_states).array().tanh().matrix();
  Eigen::MatrixXd contexts(spec_.state_dim + 1, next_states.cols());
  contexts << next_states, next_own;
  ParticleBatch particles = sampler_.Sample(contexts, m, particle_rng_);
  const Eigen::MatrixXd q = target_critic_.Forward(
      JointInputs(next_states, next_own, particles.particles, m));
  const Eigen::MatrixXd q_mean = BlockMeanColumns(q, m);
  Eigen::VectorXd y(static_cast<Eigen::Index>(batch.size()));
  for (std::size_t j = 0; j < batch.size(); ++j) {
    y(static_cast<Eigen::Index>(j)) =
        batch[j].reward + options_.gamma * q_mean(0, static_cast<Eigen::Index>(j));
  }
  return y;
}

double Pr2acAgent::CriticStep(const std::vector<AgentExperience>& batch,
                              const Eigen::VectorXd& targets) {
  const Eigen::MatrixXd states = States(batch, /*next=*/false);
  Eigen::MatrixXd x(critic_.input_size(), states.cols());
  x << states, OwnActions(batch), OpponentActions(batch);
  MlpTape tape;
  const Eigen::MatrixXd q = critic_.Forward(x, &tape);
  const Eigen::RowVectorXd err = targets.transpose() - q.row(0);
  const double n = static_cast<double>(batch.size());
  const double loss = err.squaredNorm() / n;
  if (!std::isfinite(loss)) {
    throw NumericalError("pr2ac critic loss is non-finite");
  }
  MlpGradients g = critic_.Backward(tape, (-2.0 / n) * err);
  critic_adam_.Step(critic_.mutable_parameters(), g.params);
  return loss;
}

Eigen::VectorXd Pr2acAgent::ActorStep(
    const std::vector<AgentExperience>& batch) {
  const int m = options_.particles;
  const Eigen::MatrixXd states = States(batch, /*next=*/false);
  MlpTape actor_tape;
  const Eigen::MatrixXd own =
      actor_.Forward(states, &actor_tape).array().tanh().matrix();
  Eigen::MatrixXd contexts(spec_.state_dim + 1, states.cols());
  contexts << states, own;
  ParticleBatch particles = sampler_.Sample(contexts, m, particle_rng_);
  MlpTape critic_tape;
  const Eigen::MatrixXd x = JointInputs(states, own, particles.particles, m);
  critic_.Forward(x, &critic_tape);
  MlpGradients dq = critic_.Backward(
      critic_tape, Eigen::MatrixXd::Ones(1, x.cols()), /*want_param_grads=*/false);
  // d/da^i of (1/M) sum_k Q(s, a^i, a^-i_k), particles held fixed.
  const Eigen::MatrixXd d_own =
      BlockMeanColumns(dq.inputs.row(spec_.state_dim), m);
  if (!d_own.allFinite()) {
    throw NumericalError("pr2ac actor gradient is non-finite");
  }
  const double n = static_cast<double>(batch.size());
  const Eigen::MatrixXd seed =
      -(d_own.array() * (1.0 - own.array().square())).matrix() / n;
  MlpGradients g = actor_.Backward(actor_tape, seed);
  actor_adam_.Step(actor_.mutable_parameters(), g.params);
  return d_own.row(0).transpose();
}

Eigen::MatrixXd Pr2acAgent::CriticOpponentGradient(
    const Eigen::MatrixXd& inputs) const {
  MlpTape tape;
  critic_.Forward(inputs, &tape);
  MlpGradients g = critic_.Backward(tape, Eigen::MatrixXd::Ones(1, inputs.cols()),
                                    /*want_param_grads=*/false);
  return g.inputs.bottomRows(opponent_dim());
}

void Pr2acAgent::SamplerStep(const std::vector<AgentExperience>& batch) {
  const int m = options_.particles;
  const Eigen::MatrixXd states = States(batch, /*next=*/false);
  const Eigen::MatrixXd own = OwnActions(batch);
  Eigen::MatrixXd contexts(spec_.state_dim + 1, states.cols());
  contexts << states, own;
  ParticleBatch particles = sampler_.Sample(contexts, m, particle_rng_);
  const Eigen::MatrixXd scores =
      options_.temperature *
      CriticOpponentGradient(JointInputs(states, own, particles.particles, m));
  const Eigen::MatrixXd deltas =
      kernels::SvgdDeltasParallel(particles.particles, scores, m);
  sampler_.AmortizeStep(particles, deltas);
}

void Pr2acAgent::SoftUpdateTargets() {
  SoftUpdate(actor_, target_actor_, options_.target_rate);
  SoftUpdate(critic_, target_critic_, options_.target_rate);
}

}  // namespace pr2
