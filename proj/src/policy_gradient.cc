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

#include "pr2/policy_gradient.h"

#include <stdexcept>

namespace pr2 {
namespace {

void CheckShapes(const Eigen::VectorXd& logits, const Eigen::MatrixXd& m,
                 const Eigen::MatrixXd& q) {
  if (m.rows() != logits.size() || q.rows() != logits.size() ||
      m.cols() != q.cols()) {
    throw std::invalid_argument("policy gradient: shape mismatch");
  }
}

// grad_theta log pi(a) = e_a - pi for a softmax policy.
Eigen::VectorXd ScoreFunction(const Eigen::VectorXd& pi, int a) {
  Eigen::VectorXd g = -pi;
  g(a) += 1.0;
  return g;
}

}  // namespace

Eigen::VectorXd SoftmaxPolicy(const Eigen::VectorXd& logits) {
  Eigen::VectorXd e = (logits.array() - logits.maxCoeff()).exp();
  return e / e.sum();
}

Eigen::MatrixXd RecursiveGradientTerms(const Eigen::VectorXd& logits,
                                       const Eigen::MatrixXd& conditional,
                                       const Eigen::MatrixXd& q) {
  CheckShapes(logits, conditional, q);
  const Eigen::VectorXd pi = SoftmaxPolicy(logits);
  const int A = static_cast<int>(q.rows());
  const int B = static_cast<int>(q.cols());
  Eigen::MatrixXd terms(A * B, A);
  for (int a = 0; a < A; ++a) {
    const Eigen::VectorXd score = ScoreFunction(pi, a);
    for (int b = 0; b < B; ++b) {
      terms.row(a * B + b) =
          (pi(a) * conditional(a, b) * q(a, b)) * score.transpose();
    }
  }
  return terms;
}

Eigen::MatrixXd ImportanceWeightedGradientTerms(
    const Eigen::VectorXd& logits, const Eigen::MatrixXd& conditional,
    const Eigen::MatrixXd& rho, const Eigen::MatrixXd& q) {
  CheckShapes(logits, conditional, q);
  CheckShapes(logits, rho, q);
  const Eigen::VectorXd pi = SoftmaxPolicy(logits);
  const int A = static_cast<int>(q.rows());
  const int B = static_cast<int>(q.cols());
  Eigen::MatrixXd terms = Eigen::MatrixXd::Zero(A * B, A);
  for (int a = 0; a < A; ++a) {
    const Eigen::VectorXd score = ScoreFunction(pi, a);
    for (int b = 0; b < B; ++b) {
      if (rho(a, b) == 0.0) {
        if (conditional(a, b) != 0.0) {
          throw std::invalid_argument(
              "importance weight undefined: rho vanishes where pi does not");
        }
        continue;
      }
      const double weight = conditional(a, b) / rho(a, b);
      terms.row(a * B + b) =
          (pi(a) * rho(a, b) * weight * q(a, b)) * score.transpose();
    }
  }
  return terms;
}

Eigen::MatrixXd NonCorrelatedGradientTerms(const Eigen::VectorXd& logits,
                                           const Eigen::VectorXd& opponent,
                                           const Eigen::MatrixXd& q) {
  Eigen::MatrixXd conditional = opponent.transpose().replicate(q.rows(), 1);
  return RecursiveGradientTerms(logits, conditional, q);
}

Eigen::VectorXd SampledImportanceWeightedGradient(
    const Eigen::VectorXd& logits, const Eigen::MatrixXd& conditional,
    const Eigen::MatrixXd& rho, const Eigen::MatrixXd& q, int samples,
    Rng& rng) {
  CheckShapes(logits, conditional, q);
  CheckShapes(logits, rho, q);
  const Eigen::VectorXd pi = SoftmaxPolicy(logits);
  auto draw = [&rng](const auto& probs) {
    const double u = Uniform01(rng);
    double c = 0.0;
    for (Eigen::Index k = 0; k < probs.size(); ++k) {
      c += probs(k);
      if (u < c) return static_cast<int>(k);
    }
    return static_cast<int>(probs.size() - 1);
  };
  Eigen::VectorXd g = Eigen::VectorXd::Zero(logits.size());
  for (int n = 0; n < samples; ++n) {
    const int a = draw(pi);
    const int b = draw(rho.row(a));
    g += (conditional(a, b) / rho(a, b) * q(a, b)) * ScoreFunction(pi, a);
  }
  return g / samples;
}

double RecursiveObjective(const Eigen::VectorXd& logits,
                          const Eigen::MatrixXd& conditional,
                          const Eigen::MatrixXd& q) {
  CheckShapes(logits, conditional, q);
  const Eigen::VectorXd pi = SoftmaxPolicy(logits);
  return pi.dot(conditional.cwiseProduct(q).rowwise().sum());
}

}  // namespace pr2
