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

#include "pr2/ddpg.h"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "pr2/numeric_error.h"

namespace pr2 {

void DdpgOptions::Validate() const {
  if (batch_size < 1) throw std::invalid_argument("ddpg batch_size must be >= 1");
  if (replay_capacity < 1) {
    throw std::invalid_argument("ddpg replay_capacity must be >= 1");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("ddpg gamma must lie in [0, 1)");
  }
  if (!(target_rate > 0.0 && target_rate <= 1.0)) {
    throw std::invalid_argument("ddpg target_rate must lie in (0, 1]");
  }
  if (!(critic_lr > 0.0 && actor_lr > 0.0 && predictor_lr > 0.0)) {
    throw std::invalid_argument("ddpg learning rates must be positive");
  }
  if (!(exploration.scale >= 0.0) || exploration.steps < 0) {
    throw std::invalid_argument("ddpg exploration must be nonnegative");
  }
}

OpponentPredictor::OpponentPredictor(int state_dim, int opponent_dim,
                                     const std::vector<int>& hidden,
                                     double learning_rate, Rng& init_rng)
    : net_(Mlp::Uniform(MlpLayout(state_dim, opponent_dim, hidden), init_rng)),
      adam_(net_.blocks(), AdamOptions{.learning_rate = learning_rate}) {}

Eigen::MatrixXd OpponentPredictor::Predict(const Eigen::MatrixXd& states) const {
  return net_.Forward(states).array().tanh().matrix();
}

double OpponentPredictor::Fit(const Eigen::MatrixXd& states,
                              const Eigen::MatrixXd& targets) {
  MlpTape tape;
  const Eigen::MatrixXd p = net_.Forward(states, &tape).array().tanh().matrix();
  const Eigen::MatrixXd err = p - targets;
  const double n = static_cast<double>(states.cols());
  const double loss = err.squaredNorm() / n;
  if (!std::isfinite(loss)) {
    throw NumericalError("opponent predictor loss is non-finite");
  }
  const Eigen::MatrixXd seed =
      (2.0 / n) * (err.array() * (1.0 - p.array().square())).matrix();
  adam_.Step(net_.mutable_parameters(), net_.Backward(tape, seed).params);
  return loss;
}

DdpgAgent::DdpgAgent(ContinuousAgentSpec spec, DdpgOptions options,
                     std::uint64_t seed)
    : spec_(std::move(spec)),
      options_(std::move(options)),
      buffer_(options_.replay_capacity),
      explore_rng_(MakeRng(seed, "explore")),
      replay_rng_(MakeRng(seed, "replay")) {
  options_.Validate();
  const int s = spec_.state_dim;
  const int critic_in = s + 1 + (options_.opponent_model ? opponent_dim() : 0);
  Rng actor_init = MakeRng(seed, "init.actor");
  Rng critic_init = MakeRng(seed, "init.critic");
  actor_ = Mlp::Uniform(MlpLayout(s, 1, options_.hidden), actor_init,
                        options_.actor_output_scale);
  critic_ = Mlp::Uniform(MlpLayout(critic_in, 1, options_.hidden), critic_init);
  target_actor_ = actor_;
  target_critic_ = critic_;
  if (options_.opponent_model) {
    if (spec_.opponents.empty()) {
      throw std::invalid_argument("ddpg_om needs at least one opponent");
    }
    Rng predictor_init = MakeRng(seed, "init.predictor");
    predictor_ = OpponentPredictor(s, opponent_dim(), options_.hidden,
                                   options_.predictor_lr, predictor_init);
  }
  actor_adam_ = Adam(actor_.blocks(), {.learning_rate = options_.actor_lr});
  critic_adam_ = Adam(critic_.blocks(), {.learning_rate = options_.critic_lr});
}

double DdpgAgent::Act(const State& state) {
  const double sigma = options_.exploration.At(steps_++);
  double u = actor_.Forward(StateColumns({&state}, spec_.state_dim))(0, 0);
  if (sigma > 0.0) u += sigma * StandardNormal(explore_rng_);
  return spec_.own.Denormalize(std::tanh(u));
}

double DdpgAgent::PolicyMean(const State& state) const {
  return spec_.own.Denormalize(
      std::tanh(actor_.Forward(StateColumns({&state}, spec_.state_dim))(0, 0)));
}

void DdpgAgent::Observe(const AgentExperience& experience) {
  if (static_cast<int>(experience.opponent_actions.size()) != opponent_dim()) {
    throw std::invalid_argument("experience has the wrong opponent count");
  }
  buffer_.Add(experience);
}

void DdpgAgent::Learn() {
  if (buffer_.empty()) return;
  if (options_.opponent_model) PredictorStep();
  std::vector<AgentExperience> batch =
      buffer_.Sample(options_.batch_size, replay_rng_);
  CriticStep(batch);
  ActorStep(batch);
  SoftUpdateTargets();
}

std::vector<double> DdpgAgent::Parameters() const {
  std::vector<double> out;
  for (const Mlp* net : {&actor_, &critic_, &target_actor_, &target_critic_}) {
    out.insert(out.end(), net->parameters().begin(), net->parameters().end());
  }
  if (options_.opponent_model) {
    const auto p = predictor_.network().parameters();
    out.insert(out.end(), p.begin(), p.end());
  }
  return out;
}

Eigen::MatrixXd DdpgAgent::States(const std::vector<AgentExperience>& batch,
                                  bool next) const {
  std::vector<const State*> states;
  states.reserve(batch.size());
  for (const AgentExperience& e : batch) {
    states.push_back(next ? &e.next_state : &e.state);
  }
  return StateColumns(states, spec_.state_dim);
}

Eigen::MatrixXd DdpgAgent::CriticInputs(const Eigen::MatrixXd& states,
                                        const Eigen::MatrixXd& own) const {
  Eigen::MatrixXd x(critic_.input_size(), states.cols());
  if (options_.opponent_model) {
    x << states, own, predictor_.Predict(states);
  } else {
    x << states, own;
  }
  return x;
}

double DdpgAgent::CriticStep(const std::vector<AgentExperience>& batch) {
  const Eigen::MatrixXd states = States(batch, /*next=*/false);
  const Eigen::MatrixXd next = States(batch, /*next=*/true);
  const Eigen::MatrixXd next_own =
      target_actor_.Forward(next).array().tanh().matrix();
  const Eigen::MatrixXd q_next = target_critic_.Forward(CriticInputs(next, next_own));
  Eigen::MatrixXd own(1, states.cols());
  Eigen::RowVectorXd y(states.cols());
  for (std::size_t j = 0; j < batch.size(); ++j) {
    const auto c = static_cast<Eigen::Index>(j);
    own(0, c) = spec_.own.Normalize(batch[j].own_action);
    y(c) = batch[j].reward + options_.gamma * q_next(0, c);
  }
  MlpTape tape;
  const Eigen::MatrixXd q = critic_.Forward(CriticInputs(states, own), &tape);
  const Eigen::RowVectorXd err = y - q.row(0);
  const double n = static_cast<double>(batch.size());
  const double loss = err.squaredNorm() / n;
  if (!std::isfinite(loss)) {
    throw NumericalError(name() + " critic loss is non-finite");
  }
  critic_adam_.Step(critic_.mutable_parameters(),
                    critic_.Backward(tape, (-2.0 / n) * err).params);
  return loss;
}

void DdpgAgent::ActorStep(const std::vector<AgentExperience>& batch) {
  const Eigen::MatrixXd states = States(batch, /*next=*/false);
  MlpTape actor_tape;
  const Eigen::MatrixXd own =
      actor_.Forward(states, &actor_tape).array().tanh().matrix();
  MlpTape critic_tape;
  const Eigen::MatrixXd x = CriticInputs(states, own);
  critic_.Forward(x, &critic_tape);
  MlpGradients dq = critic_.Backward(
      critic_tape, Eigen::MatrixXd::Ones(1, x.cols()), /*want_param_grads=*/false);
  const Eigen::MatrixXd d_own = dq.inputs.row(spec_.state_dim);
  if (!d_own.allFinite()) {
    throw NumericalError(name() + " actor gradient is non-finite");
  }
  const double n = static_cast<double>(batch.size());
  const Eigen::MatrixXd seed =
      -(d_own.array() * (1.0 - own.array().square())).matrix() / n;
  actor_adam_.Step(actor_.mutable_parameters(),
                   actor_.Backward(actor_tape, seed).params);
}

double DdpgAgent::PredictorStep() {
  const AgentExperience& latest = buffer_.newest();
  Eigen::MatrixXd target(opponent_dim(), 1);
  for (int d = 0; d < opponent_dim(); ++d) {
    target(d, 0) = spec_.opponents[d].Normalize(latest.opponent_actions[d]);
  }
  return predictor_.Fit(StateColumns({&latest.state}, spec_.state_dim), target);
}

void DdpgAgent::SoftUpdateTargets() {
  SoftUpdate(actor_, target_actor_, options_.target_rate);
  SoftUpdate(critic_, target_critic_, options_.target_rate);
}

}  // namespace pr2
