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

#ifndef PR2_PR2Q_H_
#define PR2_PR2Q_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pr2/q_table.h"
#include "pr2/rng.h"

namespace pr2 {

// How the opponent conditional rho(a^-i | s, a^i) is formed.
enum class OpponentModelKind {
  kSoft,      // softmax of the agent's own joint row
  kCounting,  // empirical frequencies C(a^i, a^-i, s) / C(a^i, s)
};

std::string OpponentModelName(OpponentModelKind kind);
// Throws std::invalid_argument for an unknown name.
OpponentModelKind ParseOpponentModel(const std::string& name);

struct Pr2qOptions {
  double learning_rate = 0.1;
  double gamma = 0.0;
  double beta = 0.5;
  // When set, action selection is a deterministic argmax (lowest index on
  // ties) instead of a softmax sample.
  bool greedy = false;
  OpponentModelKind opponent_model = OpponentModelKind::kCounting;

  void Validate() const;
};

class CountingModel {
 public:
  CountingModel() = default;
  CountingModel(int num_states, int own_actions, int opponent_actions);

  void Observe(int state, int own_action, int opponent_action);
  std::int64_t joint_count(int state, int own_action,
                           int opponent_action) const;
  std::int64_t marginal_count(int state, int own_action) const;
  // Uniform when the marginal count is zero.
  std::vector<double> Conditional(int state, int own_action) const;

 private:
  int own_actions_ = 0;
  int opponent_actions_ = 0;
  std::vector<std::int64_t> joint_;
  std::vector<std::int64_t> marginal_;
};

// rho(a^-i | s, a^i) stored as a (states, own, opponent) table of rows.
class ConditionalPolicyTable {
 public:
  ConditionalPolicyTable() = default;
  explicit ConditionalPolicyTable(QTable probabilities);

  // Softmax of every joint row.
  static ConditionalPolicyTable FromJoint(const QTable& joint);
  static ConditionalPolicyTable FromCounts(const CountingModel& counts,
                                           int num_states, int own_actions);

  std::span<const double> row(int state, int own_action) const {
    return table_.row(state, own_action);
  }
  const QTable& table() const { return table_; }

  // Largest |sum(row) - 1| over all rows.
  double MaxNormalizationError() const;

 private:
  QTable table_;
};

// Tabular level-1 recursive reasoning Q-learner for one agent. It sees only
// its own reward and the executed joint action.
class Pr2qAgent {
 public:
  Pr2qAgent(int num_states, int own_actions, int opponent_actions,
            Pr2qOptions options);

  int num_states() const { return num_states_; }
  int own_actions() const { return own_actions_; }
  int opponent_actions() const { return opponent_actions_; }
  const Pr2qOptions& options() const { return options_; }
  void set_beta(double beta) { options_.beta = beta; }

  const QTable& joint() const { return joint_; }
  const QTable& marginal() const { return marginal_; }
  QTable& mutable_joint() { return joint_; }
  QTable& mutable_marginal() { return marginal_; }
  const CountingModel& counts() const { return counts_; }

  std::vector<double> OpponentConditional(int state, int own_action) const;
  ConditionalPolicyTable Conditional() const;

  // sum_{a^-i} rho(a^-i | s, a^i) Q(s, a^i, a^-i) for every own action.
  std::vector<double> ExpectedValues(int state) const;
  // max over own actions of ExpectedValues.
  double Value(int state) const;
  // softmax(beta * ExpectedValues); one-hot on the argmax when greedy.
  std::vector<double> ActionDistribution(int state) const;
  int SelectAction(int state, Rng& rng) const;

  // Temporal-difference write of r + gamma V(s') into the joint entry and the
  // marginal entry. V(s') is evaluated before anything is modified.
  void Update(int state, int own_action, int opponent_action, double reward,
              int next_state);

  // log-sum-exp of each joint row; the marginal at the soft optimum.
  QTable SoftMarginalView() const;

 private:
  void CheckState(int state) const;
  void CheckOwn(int action) const;

  int num_states_;
  int own_actions_;
  int opponent_actions_;
  Pr2qOptions options_;
  QTable joint_;
  QTable marginal_;
  CountingModel counts_;
};

}  // namespace pr2

#endif  // PR2_PR2Q_H_
