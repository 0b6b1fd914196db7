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

#ifndef PR2_SOFT_OPS_H_
#define PR2_SOFT_OPS_H_

#include <span>
#include <vector>

namespace pr2 {

// log sum_k exp(x_k), shifted by the maximum so that large entries do not
// overflow. Throws std::invalid_argument for an empty or non-finite row.
double LogSumExp(std::span<const double> x);

// exp(beta * x_k) / sum_j exp(beta * x_j), again max-shifted.
std::vector<double> Softmax(std::span<const double> x, double beta = 1.0);

// Soft marginal value of one joint row: the log-sum-exp over opponent actions.
inline double SoftMarginal(std::span<const double> q_row) {
  return LogSumExp(q_row);
}

// Opponent conditional exp(Q(a^-i) - SoftMarginal(Q)); the normalizer is
// implicit.
std::vector<double> OpponentConditional(std::span<const double> q_row);

}  // namespace pr2

#endif  // PR2_SOFT_OPS_H_
