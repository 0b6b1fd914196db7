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

#ifndef PR2_IGA_H_
#define PR2_IGA_H_

#include "pr2/matrix_game.h"

namespace pr2 {

// Joint strategy point: probabilities of action 0 for both agents.
struct IgaState {
  double p = 0.5;
  double q = 0.5;
};

// Simultaneous exact-gradient ascent on the bilinear expected payoffs,
// clamped to [0, 1].
IgaState IgaStep(const IgaState& state, const MatrixGame& game,
                 double step_size);

}  // namespace pr2

#endif  // PR2_IGA_H_
