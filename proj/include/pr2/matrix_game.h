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

#ifndef PR2_MATRIX_GAME_H_
#define PR2_MATRIX_GAME_H_

#include <array>
#include <utility>

#include "pr2/game.h"

namespace pr2 {

using Payoff2x2 = std::array<std::array<double, 2>, 2>;

// Iterated two-action general-sum game played in a single constant state.
// The default payoffs have a unique, fully mixed Nash equilibrium at
// P(action 0) = 0.5 for both agents.
class MatrixGame : public Game {
 public:
  static constexpr Payoff2x2 kDefaultR1 = {{{0.0, 3.0}, {1.0, 2.0}}};
  static constexpr Payoff2x2 kDefaultR2 = {{{3.0, 2.0}, {0.0, 1.0}}};

  explicit MatrixGame(Payoff2x2 r1 = kDefaultR1, Payoff2x2 r2 = kDefaultR2,
                      double gamma = 0.0);

  const GameSpec& spec() const override { return spec_; }
  State InitialState() const override;
  StepResult Step(const State& state, const JointAction& action) const override;

  const Payoff2x2& r1() const { return r1_; }
  const Payoff2x2& r2() const { return r2_; }
  // Mixed equilibrium (p*, q*) of the game, as P(action 0) per agent.
  std::pair<double, double> equilibrium() const { return {0.5, 0.5}; }

  // (R1[a1][a2], R2[a1][a2]). Throws BoundsError for indices outside {0,1}.
  std::pair<double, double> Payoff(int a1, int a2) const;

  // Bilinear expected payoffs when agent 1 plays action 0 with probability p
  // and agent 2 with probability q. Throws std::domain_error outside [0,1].
  std::pair<double, double> ExpectedPayoffs(double p, double q) const;

  // (du1/dp, du2/dq): each agent's own-strategy gradient.
  std::pair<double, double> ExpectedPayoffGradients(double p, double q) const;

 private:
  Payoff2x2 r1_;
  Payoff2x2 r2_;
  GameSpec spec_;
};

}  // namespace pr2

#endif  // PR2_MATRIX_GAME_H_
