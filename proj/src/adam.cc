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

#include "pr2/adam.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "pr2/numeric_error.h"

namespace pr2 {

Adam::Adam(std::vector<ParameterBlock> blocks, AdamOptions options)
    : blocks_(std::move(blocks)), options_(options) {
  std::size_t total = 0;
  for (const ParameterBlock& b : blocks_) total = std::max(total, b.offset + b.size);
  m_.assign(total, 0.0);
  v_.assign(total, 0.0);
}

void Adam::Step(std::span<double> params, std::span<const double> grads) {
  if (params.size() != m_.size() || grads.size() != m_.size()) {
    throw std::invalid_argument("Adam: parameter/gradient size mismatch");
  }
  for (const ParameterBlock& b : blocks_) {
    for (std::size_t k = b.offset; k < b.offset + b.size; ++k) {
      if (!std::isfinite(grads[k])) {
        throw NumericalError("non-finite gradient in parameter block '" +
                             b.name + "'");
      }
    }
  }
  ++step_;
  const double b1 = options_.beta1;
  const double b2 = options_.beta2;
  const double c1 = 1.0 - std::pow(b1, static_cast<double>(step_));
  const double c2 = 1.0 - std::pow(b2, static_cast<double>(step_));
  const double lr = options_.learning_rate;
  for (std::size_t k = 0; k < params.size(); ++k) {
    const double g = grads[k];
    m_[k] = b1 * m_[k] + (1.0 - b1) * g;
    v_[k] = b2 * v_[k] + (1.0 - b2) * g * g;
    const double m_hat = m_[k] / c1;
    const double v_hat = v_[k] / c2;
    params[k] -= lr * m_hat / (std::sqrt(v_hat) + options_.epsilon);
  }
}

}  // namespace pr2
