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

#include "pr2/actor_critic.h"

#include <stdexcept>

namespace pr2 {

void SoftUpdate(std::span<const double> online, std::span<double> target,
                double rate) {
  if (online.size() != target.size()) {
    throw std::invalid_argument("soft update: shape mismatch");
  }
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw std::invalid_argument("soft update rate must lie in [0, 1]");
  }
  for (std::size_t k = 0; k < target.size(); ++k) {
    target[k] = rate * online[k] + (1.0 - rate) * target[k];
  }
}

void SoftUpdate(const Mlp& online, Mlp& target, double rate) {
  if (online.layer_sizes() != target.layer_sizes()) {
    throw std::invalid_argument("soft update: architectures differ");
  }
  SoftUpdate(online.parameters(), target.mutable_parameters(), rate);
}

Eigen::MatrixXd StateColumns(const std::vector<const State*>& states,
                             int state_dim) {
  Eigen::MatrixXd m(state_dim, static_cast<Eigen::Index>(states.size()));
  for (std::size_t j = 0; j < states.size(); ++j) {
    const std::vector<double>& f = states[j]->features;
    if (static_cast<int>(f.size()) != state_dim) {
      throw std::invalid_argument("state feature size mismatch");
    }
    for (int r = 0; r < state_dim; ++r) m(r, static_cast<Eigen::Index>(j)) = f[r];
  }
  return m;
}

Eigen::MatrixXd RepeatColumns(const Eigen::MatrixXd& m, int times) {
  Eigen::MatrixXd out(m.rows(), m.cols() * times);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    out.middleCols(j * times, times) = m.col(j).replicate(1, times);
  }
  return out;
}

Eigen::MatrixXd BlockMeanColumns(const Eigen::MatrixXd& m, int times) {
  if (times < 1 || m.cols() % times != 0) {
    throw std::invalid_argument("column count is not a multiple of the block");
  }
  Eigen::MatrixXd out(m.rows(), m.cols() / times);
  for (Eigen::Index j = 0; j < out.cols(); ++j) {
    out.col(j) = m.middleCols(j * times, times).rowwise().mean();
  }
  return out;
}

}  // namespace pr2
