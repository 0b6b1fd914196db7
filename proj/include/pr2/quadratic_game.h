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

#ifndef PR2_QUADRATIC_GAME_H_
#define PR2_QUADRATIC_GAME_H_

#include <array>

#include "pr2/game.h"

namespace pr2 {

struct Landmark {
  std::array<double, 2> point;
  double value;
};

// Two-agent identical-interest game on [-10, 10]^2 whose reward is the
// maximum of a broad bump peaking at 0 on (-5, -5) and a narrow bump peaking
// at 10 on (5, 5). Gradient learners started at the origin sit in the broad
// bump's basin.
class MaxOfTwoQuadraticGame : public Game {
 public:
  static constexpr double kLo = -10.0;
  static constexpr double kHi = 10.0;
  static constexpr Landmark kLocalOptimum{{-5.0, -5.0}, 0.0};
  static constexpr Landmark kGlobalOptimum{{5.0, 5.0}, 10.0};

  explicit MaxOfTwoQuadraticGame(double gamma = 0.9);

  const GameSpec& spec() const override { return spec_; }
  State InitialState() const override;
  StepResult Step(const State& state, const JointAction& action) const override;

  // Unchecked branches; exposed for contour plots and finite differences.
  static double BroadBranch(double a1, double a2);
  static double NarrowBranch(double a1, double a2);
  // 0 when the broad branch is active (ties included), 1 otherwise.
  static int ActiveBranch(double a1, double a2);

 private:
  GameSpec spec_;
};

// max(f1, f2) shared by both agents. Throws BoundsError outside [-10, 10].
double DiffReward(double a1, double a2);

}  // namespace pr2

#endif  // PR2_QUADRATIC_GAME_H_
