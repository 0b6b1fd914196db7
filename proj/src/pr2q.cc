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

#include "pr2/pr2q.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "pr2/soft_ops.h"

namespace pr2 {

std::string OpponentModelName(OpponentModelKind kind) {
  return kind == OpponentModelKind::kSoft ? "soft" : "counting";
}

OpponentModelKind ParseOpponentModel(const std::string& name) {
  if (name == "soft") return OpponentModelKind::kSoft;
  if (name == "counting") return OpponentModelKind::kCounting;
  throw std::invalid_argument("unknown opponent model '" + name +
                              "' (expected soft or counting)");
}

void Pr2qOptions::Validate() const {
  if (!(learning_rate >= 0.0 && learning_rate <= 1.0)) {
    throw std::invalid_argument("pr2q learning_rate must lie in [0, 1]");
  }
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("pr2q gamma must lie in [0, 1)");
  }
  if (!std::isfinite(beta) || beta < 0.0) {
    throw std::invalid_argument("pr2q beta must be finite and nonnegative");
  }
}

CountingModel::CountingModel(int num_states, int own_actions,
                             int opponent_actions)
    : own_actions_(own_actions),
      opponent_actions_(opponent_actions),
      joint_(static_cast<std::size_t>(num_states) * own_actions *
                 opponent_actions,
             0),
      marginal_(static_cast<std::size_t>(num_states) * own_actions, 0) {}

void CountingModel::Observe(int state, int own_action, int opponent_action) {
  ++joint_[(static_cast<std::size_t>(state) * own_actions_ + own_action) *
               opponent_actions_ +
           opponent_action];
  ++marginal_[static_cast<std::size_t>(state) * own_actions_ + own_action];
}

std::int64_t CountingModel::joint_count(int state, int own_action,
                                        int opponent_action) const {
  return joint_[(static_cast<std::size_t>(state) * own_actions_ + own_action) *
                    opponent_actions_ +
                opponent_action];
}

std::int64_t CountingModel::marginal_count(int state, int own_action) const {
  return marginal_[static_cast<std::size_t>(state) * own_actions_ +
                   own_action];
}

std::vector<double> CountingModel::Conditional(int state,
                                               int own_action) const {
  const std::int64_t total = marginal_count(state, own_action);
  std::vector<double> rho(opponent_actions_, 1.0 / opponent_actions_);
  if (total == 0) return rho;
  for (int b = 0; b < opponent_actions_; ++b) {
    rho[b] = static_cast<double>(joint_count(state, own_action, b)) /
             static_cast<double>(total);
  }
  return rho;
}

ConditionalPolicyTable::ConditionalPolicyTable(QTable probabilities)
    : table_(std::move(probabilities)) {
  if (table_.rank() != 3) {
    throw std::invalid_argument("conditional policy table must have rank 3");
  }
}

ConditionalPolicyTable ConditionalPolicyTable::FromJoint(const QTable& joint) {
  QTable probs(joint.shape());
  for (std::size_t s = 0; s < joint.shape()[0]; ++s) {
    for (std::size_t a = 0; a < joint.shape()[1]; ++a) {
      std::vector<double> rho = OpponentConditional(joint.row(s, a));
      std::copy(rho.begin(), rho.end(), probs.row(s, a).begin());
    }
  }
  return ConditionalPolicyTable(std::move(probs));
}

ConditionalPolicyTable ConditionalPolicyTable::FromCounts(
    const CountingModel& counts, int num_states, int own_actions) {
  std::vector<double> first = counts.Conditional(0, 0);
  QTable probs({static_cast<std::size_t>(num_states),
                static_cast<std::size_t>(own_actions), first.size()});
  for (int s = 0; s < num_states; ++s) {
    for (int a = 0; a < own_actions; ++a) {
      std::vector<double> rho = counts.Conditional(s, a);
      std::copy(rho.begin(), rho.end(), probs.row(s, a).begin());
    }
  }
  return ConditionalPolicyTable(std::move(probs));
}

double ConditionalPolicyTable::MaxNormalizationError() const {
  double worst = 0.0;
  for (std::size_t s = 0; s < table_.shape()[0]; ++s) {
    for (std::size_t a = 0; a < table_.shape()[1]; ++a) {
      double total = 0.0;
      for (double p : table_.row(s, a)) total += p;
      worst = std::max(worst, std::abs(total - 1.0));
    }
  }
  return worst;
}

Pr2qAgent::Pr2qAgent(int num_states, int own_actions, int opponent_actions,
                     Pr2qOptions options)
    : num_states_(num_states),
      own_actions_(own_actions),
      opponent_actions_(opponent_actions),
      options_(options) {
  if (num_states < 1 || own_actions < 1 || opponent_actions < 1) {
    throw std::invalid_argument("pr2q table extents must be positive");
  }
  options_.Validate();
  const auto s = static_cast<std::size_t>(num_states);
  const auto a = static_cast<std::size_t>(own_actions);
  const auto b = static_cast<std::size_t>(opponent_actions);
  joint_ = QTable({s, a, b});
  marginal_ = QTable({s, a});
  counts_ = CountingModel(num_states, own_actions, opponent_actions);
}

void Pr2qAgent::CheckState(int state) const {
  if (state < 0 || state >= num_states_) {
    throw std::out_of_range("state index out of range");
  }
}

void Pr2qAgent::CheckOwn(int action) const {
  if (action < 0 || action >= own_actions_) {
    throw std::out_of_range("own action index out of range");
  }
}

std::vector<double> Pr2qAgent::OpponentConditional(int state,
                                                   int own_action) const {
  CheckState(state);
  CheckOwn(own_action);
  if (options_.opponent_model == OpponentModelKind::kCounting) {
    return counts_.Conditional(state, own_action);
  }
  return pr2::OpponentConditional(joint_.row(state, own_action));
}

ConditionalPolicyTable Pr2qAgent::Conditional() const {
  if (options_.opponent_model == OpponentModelKind::kCounting) {
    return ConditionalPolicyTable::FromCounts(counts_, num_states_,
                                              own_actions_);
  }
  return ConditionalPolicyTable::FromJoint(joint_);
}

std::vector<double> Pr2qAgent::ExpectedValues(int state) const {
  std::vector<double> values(own_actions_, 0.0);
  for (int a = 0; a < own_actions_; ++a) {
    std::vector<double> rho = OpponentConditional(state, a);
    std::span<const double> q = joint_.row(state, a);
    for (int b = 0; b < opponent_actions_; ++b) values[a] += rho[b] * q[b];
  }
  return values;
}

double Pr2qAgent::Value(int state) const {
  std::vector<double> values = ExpectedValues(state);
  return *std::max_element(values.begin(), values.end());
}

std::vector<double> Pr2qAgent::ActionDistribution(int state) const {
  std::vector<double> values = ExpectedValues(state);
  if (options_.greedy) {
    std::vector<double> onehot(own_actions_, 0.0);
    onehot[std::max_element(values.begin(), values.end()) - values.begin()] =
        1.0;
    return onehot;
  }
  return Softmax(values, options_.beta);
}

int Pr2qAgent::SelectAction(int state, Rng& rng) const {
  std::vector<double> probs = ActionDistribution(state);
  if (options_.greedy) {
    return static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                            probs.begin());
  }
  const double u = Uniform01(rng);
  double cumulative = 0.0;
  for (int a = 0; a < own_actions_; ++a) {
    cumulative += probs[a];
    if (u < cumulative) return a;
  }
  return own_actions_ - 1;
}

void Pr2qAgent::Update(int state, int own_action, int opponent_action,
                       double reward, int next_state) {
  CheckState(state);
  CheckState(next_state);
  CheckOwn(own_action);
  if (opponent_action < 0 || opponent_action >= opponent_actions_) {
    throw std::out_of_range("opponent action index out of range");
  }
  const double target = reward + options_.gamma * Value(next_state);
  const double alpha = options_.learning_rate;
  double& q = joint_.at(state, own_action, opponent_action);
  q = (1.0 - alpha) * q + alpha * target;
  double& m = marginal_.at(state, own_action);
  m = (1.0 - alpha) * m + alpha * target;
  counts_.Observe(state, own_action, opponent_action);
}

QTable Pr2qAgent::SoftMarginalView() const {
  QTable view(marginal_.shape());
  for (int s = 0; s < num_states_; ++s) {
    for (int a = 0; a < own_actions_; ++a) {
      view.at(s, a) = SoftMarginal(joint_.row(s, a));
    }
  }
  return view;
}

}  // namespace pr2
