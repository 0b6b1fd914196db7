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

#ifndef PR2_MLP_H_
#define PR2_MLP_H_

#include <Eigen/Dense>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "pr2/rng.h"

namespace pr2 {

// Parameter storage aligned like Eigen's own matrices. Vectorized kernels
// choose their split between peeled and packet iterations from the address,
// so a fixed alignment keeps results independent of where the heap put us.
using AlignedVector = std::vector<double, Eigen::aligned_allocator<double>>;

// A named, contiguous slice of a flat parameter vector.
struct ParameterBlock {
  std::string name;
  std::size_t offset = 0;
  std::size_t size = 0;
};

// Activations recorded by Mlp::Forward and consumed by Mlp::Backward.
class MlpTape {
 public:
  bool empty() const { return activations_.empty(); }
  int batch_size() const {
    return empty() ? 0 : static_cast<int>(activations_.front().cols());
  }

 private:
  friend class Mlp;
  // Input of every layer; [0] is the network input. A hidden unit's
  // rectifier is active exactly where its recorded output is positive.
  std::vector<Eigen::MatrixXd> activations_;
};

struct MlpGradients {
  AlignedVector params;  // same layout as Mlp::parameters()
  Eigen::MatrixXd inputs;      // d(loss)/d(input), one column per sample
};

// Fully connected network with rectifier hidden layers and a linear output.
// Batches are column-major: one column per sample. All parameters live in a
// single flat vector laid out layer by layer as [W (out x in), b (out)].
class Mlp {
 public:
  Mlp() = default;
  // Zero-initialized network.
  explicit Mlp(std::vector<int> layer_sizes);

  // Weights and biases uniform in +-1/sqrt(fan_in). The last layer is then
  // multiplied by `output_scale`.
  static Mlp Uniform(std::vector<int> layer_sizes, Rng& rng,
                     double output_scale = 1.0);

  const std::vector<int>& layer_sizes() const { return sizes_; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  int num_layers() const { return static_cast<int>(sizes_.size()) - 1; }
  std::size_t num_parameters() const { return params_.size(); }

  std::span<const double> parameters() const { return params_; }
  std::span<double> mutable_parameters() { return params_; }
  void SetParameters(std::span<const double> values);
  std::vector<ParameterBlock> blocks() const;

  Eigen::Map<const Eigen::MatrixXd> weights(int layer) const;
  Eigen::Map<const Eigen::VectorXd> bias(int layer) const;

  // Throws std::invalid_argument when inputs.rows() != input_size().
  Eigen::MatrixXd Forward(const Eigen::MatrixXd& inputs) const;
  Eigen::MatrixXd Forward(const Eigen::MatrixXd& inputs, MlpTape* tape) const;

  // Reverse-mode sweep seeded with d(loss)/d(output). Parameter gradients are
  // summed over the batch. relu'(0) is taken as 0. Throws std::logic_error
  // for an empty tape.
  MlpGradients Backward(const MlpTape& tape, const Eigen::MatrixXd& output_grad,
                        bool want_param_grads = true) const;

  bool operator==(const Mlp&) const = default;

 private:
  std::size_t weight_offset(int layer) const { return offsets_[layer]; }
  std::size_t bias_offset(int layer) const {
    return offsets_[layer] +
           static_cast<std::size_t>(sizes_[layer]) * sizes_[layer + 1];
  }

  std::vector<int> sizes_;
  std::vector<std::size_t> offsets_;
  AlignedVector params_;
};

// input -> hidden... -> output; hidden defaults to two layers of 100 units.
std::vector<int> MlpLayout(int input, int output,
                           const std::vector<int>& hidden = {100, 100});

}  // namespace pr2

#endif  // PR2_MLP_H_
