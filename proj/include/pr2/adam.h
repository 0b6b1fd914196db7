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

#ifndef PR2_ADAM_H_
#define PR2_ADAM_H_

#include <cstdint>
#include <span>
#include <vector>

#include "pr2/mlp.h"

namespace pr2 {

struct AdamOptions {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Bias-corrected Adam over a flat parameter vector partitioned into blocks.
class Adam {
 public:
  Adam() = default;
  Adam(std::vector<ParameterBlock> blocks, AdamOptions options);

  // One descent step. A non-finite gradient aborts the step before any
  // parameter is touched and raises NumericalError naming the block.
  void Step(std::span<double> params, std::span<const double> grads);

  std::int64_t step_count() const { return step_; }
  const AdamOptions& options() const { return options_; }
  std::span<const double> first_moment() const { return m_; }
  std::span<const double> second_moment() const { return v_; }

 private:
  std::vector<ParameterBlock> blocks_;
  AdamOptions options_;
  std::vector<double> m_;
  std::vector<double> v_;
  std::int64_t step_ = 0;
};

}  // namespace pr2

#endif  // PR2_ADAM_H_
