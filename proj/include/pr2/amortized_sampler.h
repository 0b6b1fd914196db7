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

#ifndef PR2_AMORTIZED_SAMPLER_H_
#define PR2_AMORTIZED_SAMPLER_H_

#include <Eigen/Dense>
#include <vector>

#include "pr2/actor_critic.h"
#include "pr2/adam.h"
#include "pr2/mlp.h"
#include "pr2/rng.h"

namespace pr2 {

// Particles drawn for a batch of contexts, kept for the amortization step.
struct ParticleBatch {
  int per_context = 0;
  Eigen::MatrixXd inputs;     // [context; xi], one column per particle
  Eigen::MatrixXd particles;  // squashed outputs in [-1, 1]
  MlpTape tape;
};

// Generator network (context, xi) -> tanh(.) trained by amortized SVGD.
// Contexts and particles live in normalized action coordinates.
class AmortizedSampler {
 public:
  AmortizedSampler() = default;
  AmortizedSampler(int context_dim, int output_dim, int noise_dim,
                   const std::vector<int>& hidden, double learning_rate,
                   Rng& init_rng);

  int context_dim() const { return context_dim_; }
  int output_dim() const { return output_dim_; }
  int noise_dim() const { return noise_dim_; }

  // M draws per context column, particle k of context j in column j*M + k.
  ParticleBatch Sample(const Eigen::MatrixXd& contexts, int particles_per_context,
                       Rng& rng) const;

  // Moves the generator along sum_j (d particle_j / d phi)^T delta_j, averaged
  // over particles, with one Adam step.
  void AmortizeStep(const ParticleBatch& batch, const Eigen::MatrixXd& deltas);

  const Mlp& generator() const { return generator_; }
  Mlp& mutable_generator() { return generator_; }
  const Adam& optimizer() const { return adam_; }

 private:
  int context_dim_ = 0;
  int output_dim_ = 0;
  int noise_dim_ = 0;
  Mlp generator_;
  Adam adam_;
};

// Real-valued opponent actions for one (state, own action) query.
std::vector<std::vector<double>> SampleOpponents(
    const AmortizedSampler& sampler, const std::vector<double>& state_features,
    double own_action, const ContinuousAgentSpec& spec, int particles,
    Rng& rng);

}  // namespace pr2

#endif  // PR2_AMORTIZED_SAMPLER_H_
