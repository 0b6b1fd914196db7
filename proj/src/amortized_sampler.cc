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

#include "pr2/amortized_sampler.h"

#include <stdexcept>

namespace pr2 {

AmortizedSampler::AmortizedSampler(int context_dim, int output_dim,
                                   int noise_dim,
                                   const std::vector<int>& hidden,
                                   double learning_rate, Rng& init_rng)
    : context_dim_(context_dim),
      output_dim_(output_dim),
      noise_dim_(noise_dim),
      generator_(Mlp::Uniform(
          MlpLayout(context_dim + noise_dim, output_dim, hidden), init_rng)),
      adam_(generator_.blocks(), AdamOptions{.learning_rate = learning_rate}) {
  if (noise_dim < 1 || output_dim < 1 || context_dim < 0) {
    throw std::invalid_argument("bad sampler dimensions");
  }
}

ParticleBatch AmortizedSampler::Sample(const Eigen::MatrixXd& contexts,
                                       int particles_per_context,
                                       Rng& rng) const {
  if (particles_per_context < 1) {
    throw std::invalid_argument("need at least one particle per context");
  }
  if (contexts.rows() != context_dim_) {
    throw std::invalid_argument("sampler context dimension mismatch");
  }
  const int m = particles_per_context;
  ParticleBatch out;
  out.per_context = m;
  out.inputs.resize(context_dim_ + noise_dim_, contexts.cols() * m);
  out.inputs.topRows(context_dim_) = RepeatColumns(contexts, m);
  for (Eigen::Index c = 0; c < out.inputs.cols(); ++c) {
    for (int r = 0; r < noise_dim_; ++r) {
      out.inputs(context_dim_ + r, c) = StandardNormal(rng);
    }
  }
  out.particles =
      generator_.Forward(out.inputs, &out.tape).array().tanh().matrix();
  return out;
}

void AmortizedSampler::AmortizeStep(const ParticleBatch& batch,
                                    const Eigen::MatrixXd& deltas) {
  if (deltas.rows() != batch.particles.rows() ||
      deltas.cols() != batch.particles.cols()) {
    throw std::invalid_argument("delta shape differs from the particles");
  }
  // Chain rule through the squash, negated for a descent-form optimizer.
  const Eigen::MatrixXd seed =
      -(deltas.array() * (1.0 - batch.particles.array().square())).matrix() /
      static_cast<double>(deltas.cols());
  MlpGradients g = generator_.Backward(batch.tape, seed);
  adam_.Step(generator_.mutable_parameters(), g.params);
}

std::vector<std::vector<double>> SampleOpponents(
    const AmortizedSampler& sampler, const std::vector<double>& state_features,
    double own_action, const ContinuousAgentSpec& spec, int particles,
    Rng& rng) {
  if (static_cast<int>(state_features.size()) + 1 != sampler.context_dim()) {
    throw std::invalid_argument("sampler context dimension mismatch");
  }
  Eigen::MatrixXd context(sampler.context_dim(), 1);
  for (std::size_t r = 0; r < state_features.size(); ++r) {
    context(static_cast<Eigen::Index>(r), 0) = state_features[r];
  }
  context(sampler.context_dim() - 1, 0) = spec.own.Normalize(own_action);
  ParticleBatch batch = sampler.Sample(context, particles, rng);
  std::vector<std::vector<double>> out(particles);
  for (int k = 0; k < particles; ++k) {
    for (int d = 0; d < sampler.output_dim(); ++d) {
      out[k].push_back(spec.opponents[d].Denormalize(batch.particles(d, k)));
    }
  }
  return out;
}

}  // namespace pr2
