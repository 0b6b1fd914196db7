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

#ifndef PR2_SOFT_BELLMAN_H_
#define PR2_SOFT_BELLMAN_H_

#include <vector>

#include "pr2/matrix_game.h"
#include "pr2/q_table.h"

namespace pr2 {

// Enumerable model of one agent's view of a discrete game: its reward
// r(s, a^i, a^-i), the transition kernel P(s' | s, a^i, a^-i) and its own
// policy pi(a^i | s).
struct TabularGameModel {
  int num_states = 1;
  int own_actions = 0;
  int opponent_actions = 0;
  QTable reward;      // (S, A_i, A_-i)
  QTable transition;  // (S, A_i, A_-i, S')
  QTable own_policy;  // (S, A_i)

  // Throws std::invalid_argument on inconsistent shapes or rows that are not
  // probability vectors.
  void Validate() const;
};

// The model of a matrix game held by agent `agent`: one absorbing state, its
// own payoff indexed (own action, opponent action), and a policy that plays
// action 0 with probability `p_own_action0`.
TabularGameModel MatrixGameModel(const MatrixGame& game, int agent,
                                 double p_own_action0);

// (TQ)(s, a^i, a^-i) = r + gamma * sum_{s'} P(s') sum_{a^i'} pi(a^i' | s')
//                          * log sum_{a^-i'} exp Q(s', a^i', a^-i').
QTable SoftBellmanOperator(const QTable& q, const TabularGameModel& model,
                           double gamma);

// Iterates the operator from `start` until successive iterates differ by at
// most `tolerance` in sup norm or `max_iterations` is reached.
QTable SoftValueIteration(const QTable& start, const TabularGameModel& model,
                          double gamma, double tolerance, int max_iterations);

}  // namespace pr2

#endif  // PR2_SOFT_BELLMAN_H_
