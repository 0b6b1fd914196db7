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

#include "pr2/matrix_game.h"

#include <sstream>
#include <stdexcept>

namespace pr2 {

MatrixGame::MatrixGame(Payoff2x2 r1, Payoff2x2 r2, double gamma)
    : r1_(r1), r2_(r2) {
  spec_.n_agents = 2;
  spec_.action_spaces = {DiscreteSpace{2}, DiscreteSpace{2}};
  spec_.num_states = 1;
  spec_.state_dim = 1;
  spec_.gamma = gamma;
  spec_.Validate();
}

State MatrixGame::InitialState() const { return State{0, {0.0}}; }

StepResult MatrixGame::Step(const State& state,
                            const JointAction& action) const {
  ValidateJointAction(spec_, action);
  const auto [u1, u2] =
      Payoff(static_cast<int>(action[0]), static_cast<int>(action[1]));
  return StepResult{{u1, u2}, state};
}

std::pair<double, double> MatrixGame::Payoff(int a1, int a2) const {
  for (int agent = 0; agent < 2; ++agent) {
    const int a = agent == 0 ? a1 : a2;
    if (a < 0 || a > 1) {
      std::ostringstream msg;
      msg << "agent " << agent << ": action index " << a
          << " outside {0, 1}";
      throw BoundsError(agent, msg.str());
    }
  }
  return {r1_[a1][a2], r2_[a1][a2]};
}

std::pair<double, double> MatrixGame::ExpectedPayoffs(double p,
                                                      double q) const {
  if (!(p >= 0.0 && p <= 1.0) || !(q >= 0.0 && q <= 1.0)) {
    throw std::domain_error("strategy probabilities must lie in [0, 1]");
  }
  const double pa[2] = {p, 1.0 - p};
  const double qb[2] = {q, 1.0 - q};
  double u1 = 0.0, u2 = 0.0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      u1 += pa[a] * qb[b] * r1_[a][b];
      u2 += pa[a] * qb[b] * r2_[a][b];
    }
  }
  return {u1, u2};
}

std::pair<double, double> MatrixGame::ExpectedPayoffGradients(
    double p, double q) const {
  const double qb[2] = {q, 1.0 - q};
  const double pa[2] = {p, 1.0 - p};
  double du1 = 0.0, du2 = 0.0;
  for (int b = 0; b < 2; ++b) du1 += qb[b] * (r1_[0][b] - r1_[1][b]);
  for (int a = 0; a < 2; ++a) du2 += pa[a] * (r2_[a][0] - r2_[a][1]);
  return {du1, du2};
}

}  // namespace pr2
