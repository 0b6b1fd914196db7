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

#include "pr2/iga.h"

#include <algorithm>

namespace pr2 {

IgaState IgaStep(const IgaState& state, const MatrixGame& game,
                 double step_size) {
  const auto [du1, du2] = game.ExpectedPayoffGradients(state.p, state.q);
  return IgaState{std::clamp(state.p + step_size * du1, 0.0, 1.0),
                  std::clamp(state.q + step_size * du2, 0.0, 1.0)};
}

}  // namespace pr2
