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

#include "pr2/game.h"

#include <cmath>
#include <sstream>

namespace pr2 {

void GameSpec::Validate() const {
  if (n_agents < 2) {
    throw std::invalid_argument("a game needs at least two agents");
  }
  if (static_cast<int>(action_spaces.size()) != n_agents) {
    throw std::invalid_argument("one action space per agent is required");
  }
  for (const ActionSpace& space : action_spaces) {
    if (const auto* d = std::get_if<DiscreteSpace>(&space)) {
      if (d->size < 1) throw std::invalid_argument("empty discrete space");
    } else {
      const auto& iv = std::get<IntervalSpace>(space);
      if (!(iv.lo < iv.hi)) {
        throw std::invalid_argument("interval space needs lo < hi");
      }
    }
  }
  if (num_states < 1) throw std::invalid_argument("num_states must be >= 1");
  if (!(gamma >= 0.0 && gamma < 1.0)) {
    throw std::invalid_argument("gamma must lie in [0, 1)");
  }
}

void ValidateJointAction(const GameSpec& spec, const JointAction& action) {
  if (static_cast<int>(action.size()) != spec.n_agents) {
    throw std::invalid_argument("joint action length differs from n_agents");
  }
  for (int i = 0; i < spec.n_agents; ++i) {
    const double a = action[i];
    std::ostringstream msg;
    if (const auto* d = std::get_if<DiscreteSpace>(&spec.action_spaces[i])) {
      if (!(a >= 0 && a < d->size) || std::floor(a) != a) {
        msg << "agent " << i << ": action " << a << " is not an index in [0, "
            << d->size << ")";
        throw BoundsError(i, msg.str());
      }
    } else {
      const auto& iv = std::get<IntervalSpace>(spec.action_spaces[i]);
      if (!iv.Contains(a)) {
        msg << "agent " << i << ": action " << a << " outside [" << iv.lo
            << ", " << iv.hi << "]";
        throw BoundsError(i, msg.str());
      }
    }
  }
}

}  // namespace pr2
