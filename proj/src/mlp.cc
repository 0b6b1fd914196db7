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

#include "pr2/mlp.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace pr2 {

Mlp::Mlp(std::vector<int> layer_sizes) : sizes_(std::move(layer_sizes)) {
  if (sizes_.size() < 2) {
    throw std::invalid_argument("an MLP needs at least input and output sizes");
  }
  for (int s : sizes_) {
    if (s < 1) throw std::invalid_argument("layer sizes must be positive");
  }
  std::size_t total = 0;
  for (int l = 0; l < num_layers(); ++l) {
    offsets_.push_back(total);
    total += static_cast<std::size_t>(sizes_[l] + 1) * sizes_[l + 1];
  }
  params_.assign(total, 0.0);
}

Mlp Mlp::Uniform(std::vector<int> layer_sizes, Rng& rng, double output_scale) {
  Mlp net(std::move(layer_sizes));
  for (int l = 0; l < net.num_layers(); ++l) {
    const double bound = 1.0 / std::sqrt(static_cast<double>(net.sizes_[l]));
    std::uniform_real_distribution<double> dist(-bound, bound);
    const double scale = (l == net.num_layers() - 1) ? output_scale : 1.0;
    const std::size_t begin = net.offsets_[l];
    const std::size_t end =
        begin + static_cast<std::size_t>(net.sizes_[l] + 1) * net.sizes_[l + 1];
    for (std::size_t k = begin; k < end; ++k) {
      net.params_[k] = scale * dist(rng);
    }
  }
  return net;
}

void Mlp::SetParameters(std::span<const double> values) {
  if (values.size() != params_.size()) {
    throw std::invalid_argument("parameter count mismatch");
  }
  std::copy(values.begin(), values.end(), params_.begin());
}

std::vector<ParameterBlock> Mlp::blocks() const {
  std::vector<ParameterBlock> out;
  for (int l = 0; l < num_layers(); ++l) {
    const std::size_t nw = static_cast<std::size_t>(sizes_[l]) * sizes_[l + 1];
    out.push_back({"layer" + std::to_string(l) + ".weight", weight_offset(l), nw});
    out.push_back({"layer" + std::to_string(l) + ".bias", bias_offset(l),
                   static_cast<std::size_t>(sizes_[l + 1])});
  }
  return out;
}

Eigen::Map<const Eigen::MatrixXd> Mlp::weights(int layer) const {
  return {params_.data() + weight_offset(layer), sizes_[layer + 1],
          sizes_[layer]};
}

Eigen::Map<const Eigen::VectorXd> Mlp::bias(int layer) const {
  return {params_.data() + bias_offset(layer), sizes_[layer + 1]};
}

Eigen::MatrixXd Mlp::Forward(const Eigen::MatrixXd& inputs) const {
  return Forward(inputs, nullptr);
}

Eigen::MatrixXd Mlp::Forward(const Eigen::MatrixXd& inputs,
                             MlpTape* tape) const {
  if (sizes_.empty() || inputs.rows() != input_size()) {
    throw std::invalid_argument("MLP input has " +
                                std::to_string(inputs.rows()) +
                                " rows, expected " +
                                std::to_string(sizes_.empty() ? 0 : input_size()));
  }
  if (tape != nullptr) {
    tape->activations_.clear();
    tape->activations_.reserve(num_layers());
    tape->activations_.push_back(inputs);
  }
  Eigen::MatrixXd h;
  for (int l = 0; l < num_layers(); ++l) {
    const Eigen::MatrixXd& in = l == 0 ? inputs : h;
    Eigen::MatrixXd z(sizes_[l + 1], inputs.cols());
    z.noalias() = weights(l) * in;
    z.colwise() += bias(l);
    if (l < num_layers() - 1) z.array() = z.array().max(0.0);
    h = std::move(z);
    if (tape != nullptr && l < num_layers() - 1) {
      tape->activations_.push_back(h);
    }
  }
  return h;
}

MlpGradients Mlp::Backward(const MlpTape& tape,
                           const Eigen::MatrixXd& output_grad,
                           bool want_param_grads) const {
  if (tape.empty()) {
    throw std::logic_error("Backward called without a recorded forward pass");
  }
  if (static_cast<int>(tape.activations_.size()) != num_layers() ||
      tape.activations_.front().rows() != input_size()) {
    throw std::logic_error("tape was recorded by a different architecture");
  }
  if (output_grad.rows() != output_size() ||
      output_grad.cols() != tape.activations_.front().cols()) {
    throw std::invalid_argument("output gradient shape mismatch");
  }
  MlpGradients grads;
  if (want_param_grads) grads.params.assign(params_.size(), 0.0);
  Eigen::MatrixXd delta = output_grad;
  for (int l = num_layers() - 1; l >= 0; --l) {
    const Eigen::MatrixXd& in = tape.activations_[l];
    if (want_param_grads) {
      Eigen::Map<Eigen::MatrixXd> gw(grads.params.data() + weight_offset(l),
                                     sizes_[l + 1], sizes_[l]);
      Eigen::Map<Eigen::VectorXd> gb(grads.params.data() + bias_offset(l),
                                     sizes_[l + 1]);
      gw.noalias() = delta * in.transpose();
      gb = delta.rowwise().sum();
    }
    Eigen::MatrixXd next(sizes_[l], delta.cols());
    next.noalias() = weights(l).transpose() * delta;
    if (l > 0) {
      // relu'(z) = 1 where the recorded output is positive, 0 otherwise.
      next.array() *= (in.array() > 0.0).cast<double>();
    }
    delta = std::move(next);
  }
  grads.inputs = std::move(delta);
  return grads;
}

std::vector<int> MlpLayout(int input, int output,
                           const std::vector<int>& hidden) {
  std::vector<int> sizes;
  sizes.push_back(input);
  sizes.insert(sizes.end(), hidden.begin(), hidden.end());
  sizes.push_back(output);
  return sizes;
}

}  // namespace pr2
