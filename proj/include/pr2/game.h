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

#ifndef PR2_GAME_H_
#define PR2_GAME_H_

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pr2 {

struct DiscreteSpace {
  int size = 0;
};

struct IntervalSpace {
  double lo = 0.0;
  double hi = 0.0;

  double mid() const { return 0.5 * (lo + hi); }
  double half_width() const { return 0.5 * (hi - lo); }
  bool Contains(double x) const { return x >= lo && x <= hi; }
};

using ActionSpace = std::variant<DiscreteSpace, IntervalSpace>;

// Raised when an action falls outside its agent's declared space.
class BoundsError : public std::out_of_range {
 public:
  BoundsError(int agent, const std::string& what)
      : std::out_of_range(what), agent_(agent) {}
  int agent() const { return agent_; }

 private:
  int agent_;
};

struct GameSpec {
  int n_agents = 2;
  std::vector<ActionSpace> action_spaces;
  // Number of enumerable states; both benchmark games have exactly one.
  int num_states = 1;
  int state_dim = 1;
  double gamma = 0.0;

  // Throws std::invalid_argument on a malformed spec.
  void Validate() const;
};

// State carries both a tabular index and a feature vector so tabular and
// function-approximation learners can share one game interface.
struct State {
  int index = 0;
  std::vector<double> features;

  bool operator==(const State&) const = default;
};

// One value per agent: an integral index for discrete spaces, a real number
// for interval spaces.
using JointAction = std::vector<double>;

struct Transition {
  State state;
  JointAction joint_action;
  std::vector<double> rewards;
  State next_state;
};

struct StepResult {
  std::vector<double> rewards;
  State next_state;
};

// Throws BoundsError naming the first offending agent.
void ValidateJointAction(const GameSpec& spec, const JointAction& action);

class Game {
 public:
  virtual ~Game() = default;

  virtual const GameSpec& spec() const = 0;
  virtual State InitialState() const = 0;
  // Rewards for every agent and the successor state. Validates the action.
  virtual StepResult Step(const State& state,
                          const JointAction& action) const = 0;
};

}  // namespace pr2

#endif  // PR2_GAME_H_
