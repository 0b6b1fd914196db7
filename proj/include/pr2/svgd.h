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

#ifndef PR2_SVGD_H_
#define PR2_SVGD_H_

#include <Eigen/Dense>

namespace pr2 {

// Particles are stored column-wise: a d x M matrix holds M points in R^d.

// Radial-basis kernel exp(-||x - y||^2 / h).
double RbfKernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y, double h);

// Median heuristic: median of all M x M squared pairwise distances divided
// by log(M + 1). Falls back to 1 when the particles coincide.
double MedianBandwidth(const Eigen::MatrixXd& particles);

// Stein variational direction for every particle j:
//   Delta_j = (1/M) sum_k [ k(a_k, a_j) * score_k + grad_{a_k} k(a_k, a_j) ],
// where score_k is the gradient of the unnormalized log target density at
// a_k. Throws NumericalError if a score is non-finite.
Eigen::MatrixXd SvgdDelta(const Eigen::MatrixXd& particles,
                          const Eigen::MatrixXd& scores, double bandwidth);

// Same with the median-heuristic bandwidth.
Eigen::MatrixXd SvgdDelta(const Eigen::MatrixXd& particles,
                          const Eigen::MatrixXd& scores);

}  // namespace pr2

#endif  // PR2_SVGD_H_
