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

#ifndef PR2_POLICY_GRADIENT_H_
#define PR2_POLICY_GRADIENT_H_

#include <Eigen/Dense>

#include "pr2/rng.h"

namespace pr2 {

// Closed-form policy-gradient estimators on a single-state discrete game.
// The agent's policy is a softmax over `logits`; `q` is its joint value
// table (own action x opponent action). Every estimator returns one row of
// contributions per joint action (row index a * num_opponent + b) and one
// column per logit, so estimators can be compared term by term. The full
// gradient is the column sum.

Eigen::VectorXd SoftmaxPolicy(const Eigen::VectorXd& logits);

// pi(a) grad log pi(a) sum_b pi^-i(b | a) Q(a, b), using the true opponent
// conditional (rows of `conditional` are distributions over b).
Eigen::MatrixXd RecursiveGradientTerms(const Eigen::VectorXd& logits,
                                       const Eigen::MatrixXd& conditional,
                                       const Eigen::MatrixXd& q);

// Same expectation taken under the approximation rho and reweighted by
// pi^-i(b | a) / rho(b | a). Requires rho > 0 wherever pi^-i > 0.
Eigen::MatrixXd ImportanceWeightedGradientTerms(
    const Eigen::VectorXd& logits, const Eigen::MatrixXd& conditional,
    const Eigen::MatrixXd& rho, const Eigen::MatrixXd& q);

// Independent factorization: the opponent marginal ignores the agent's
// action.
Eigen::MatrixXd NonCorrelatedGradientTerms(const Eigen::VectorXd& logits,
                                           const Eigen::VectorXd& opponent,
                                           const Eigen::MatrixXd& q);

// Monte Carlo version of the importance-weighted estimator: a ~ pi,
// b ~ rho(. | a), averaged over `samples` draws.
Eigen::VectorXd SampledImportanceWeightedGradient(
    const Eigen::VectorXd& logits, const Eigen::MatrixXd& conditional,
    const Eigen::MatrixXd& rho, const Eigen::MatrixXd& q, int samples,
    Rng& rng);

// The objective whose gradient RecursiveGradientTerms sums to.
double RecursiveObjective(const Eigen::VectorXd& logits,
                          const Eigen::MatrixXd& conditional,
                          const Eigen::MatrixXd& q);

inline Eigen::VectorXd SumTerms(const Eigen::MatrixXd& terms) {
  return terms.colwise().sum().transpose();
}

}  // namespace pr2

#endif  // PR2_POLICY_GRADIENT_H_
