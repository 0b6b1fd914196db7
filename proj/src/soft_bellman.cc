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

#include "pr2/soft_bellman.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "pr2/soft_ops.h"

namespace pr2 {
namespace {

void RequireShape(const QTable& t, std::vector<std::size_t> shape,
                  const char* what) {
  if (t.shape() != shape) {
    throw std::invalid_argument(std::string("tabular model: bad shape for ") +
                                what);
  }
}

void RequireStochasticRows(const QTable& t, const char* what) {
  const std::size_t width = t.shape().back();
  for (std::size_t k = 0; k < t.size(); k += width) {
    double total = 0.0;
    for (std::size_t j = 0; j < width; ++j) {
      const double p = t.values()[k + j];
      if (!(p >= 0.0)) {
        throw std::invalid_argument(std::string("negative probability in ") +
                                    what);
      }
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw std::invalid_argument(std::string("row of ") + what +
                                  " does not sum to one");
    }
  }
}

}  // namespace

void TabularGameModel::Validate() const {
  const auto s = static_cast<std::size_t>(num_states);
  const auto a = static_cast<std::size_t>(own_actions);
  const auto b = static_cast<std::size_t>(opponent_actions);
  RequireShape(reward, {s, a, b}, "reward");
  RequireShape(transition, {s, a, b, s}, "transition");
  RequireShape(own_policy, {s, a}, "own_policy");
  RequireStochasticRows(transition, "transition");
  RequireStochasticRows(own_policy, "own_policy");
}

TabularGameModel MatrixGameModel(const MatrixGame& game, int agent,
                                 double p_own_action0) {
  if (agent != 0 && agent != 1) throw std::out_of_range("agent must be 0 or 1");
  TabularGameModel model;
  model.num_states = 1;
  model.own_actions = 2;
  model.opponent_actions = 2;
  model.reward = QTable({1, 2, 2});
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      model.reward.at(0, a, b) =
          agent == 0 ? game.r1()[a][b] : game.r2()[b][a];
    }
  }
  model.transition = QTable({1, 2, 2, 1}, 1.0);
  model.own_policy = QTable({1, 2});
  model.own_policy.at(0, 0) = p_own_action0;
  model.own_policy.at(0, 1) = 1.0 - p_own_action0;
  model.Validate();
  return model;
}

QTable SoftBellmanOperator(const QTable& q, const TabularGameModel& model,
                           double gamma) {
  const int S = model.num_states;
  const int A = model.own_actions;
  const int B = model.opponent_actions;
  if (q.shape() != model.reward.shape()) {
    throw std::invalid_argument("Q table shape differs from the model");
  }
  // Soft state value: expectation over own actions of the soft marginal.
  std::vector<double> soft_value(S, 0.0);
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      soft_value[s] += model.own_policy.at(s, a) * SoftMarginal(q.row(s, a));
    }
  }
  QTable out(q.shape());
  for (int s = 0; s < S; ++s) {
    for (int a = 0; a < A; ++a) {
      for (int b = 0; b < B; ++b) {
        double next = 0.0;
        std::span<const double> p = model.transition.row(s, a, b);
        for (int s2 = 0; s2 < S; ++s2) next += p[s2] * soft_value[s2];
        out.at(s, a, b) = model.reward.at(s, a, b) + gamma * next;
      }
    }
  }
  return out;
}

QTable SoftValueIteration(const QTable& start, const TabularGameModel& model,
                          double gamma, double tolerance, int max_iterations) {
  QTable q = start;
  for (int it = 0; it < max_iterations; ++it) {
    QTable next = SoftBellmanOperator(q, model, gamma);
    const double change = next.SupDistance(q);
    q = std::move(next);
    if (change <= tolerance) break;
  }
  return q;
}

}  // namespace pr2
