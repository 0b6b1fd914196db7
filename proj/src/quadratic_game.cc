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

#include "pr2/quadratic_game.h"

#include <algorithm>

namespace pr2 {

MaxOfTwoQuadraticGame::MaxOfTwoQuadraticGame(double gamma) {
  spec_.n_agents = 2;
  spec_.action_spaces = {IntervalSpace{kLo, kHi}, IntervalSpace{kLo, kHi}};
  spec_.num_states = 1;
  spec_.state_dim = 1;
  spec_.gamma = gamma;
  spec_.Validate();
}

State MaxOfTwoQuadraticGame::InitialState() const { return State{0, {0.0}}; }

StepResult MaxOfTwoQuadraticGame::Step(const State& state,
                                       const JointAction& action) const {
  ValidateJointAction(spec_, action);
  const double r = DiffReward(action[0], action[1]);
  return StepResult{{r, r}, state};
}

double MaxOfTwoQuadraticGame::BroadBranch(double a1, double a2) {
  const double u = (a1 + 5.0) / 3.0;
  const double v = (a2 + 5.0) / 3.0;
  return 0.8 * (-u * u - v * v);
}

double MaxOfTwoQuadraticGame::NarrowBranch(double a1, double a2) {
  const double u = a1 - 5.0;
  const double v = a2 - 5.0;
  return 1.0 * (-u * u - v * v) + 10.0;
}

int MaxOfTwoQuadraticGame::ActiveBranch(double a1, double a2) {
  return NarrowBranch(a1, a2) > BroadBranch(a1, a2) ? 1 : 0;
}

double DiffReward(double a1, double a2) {
  const double a[2] = {a1, a2};
  for (int i = 0; i < 2; ++i) {
    if (!(a[i] >= MaxOfTwoQuadraticGame::kLo &&
          a[i] <= MaxOfTwoQuadraticGame::kHi)) {
      throw BoundsError(i, "agent " + std::to_string(i) + ": action " +
                               std::to_string(a[i]) +
                               " outside [-10, 10]");
    }
  }
  return std::max(MaxOfTwoQuadraticGame::BroadBranch(a1, a2),
                  MaxOfTwoQuadraticGame::NarrowBranch(a1, a2));
}

}  // namespace pr2
