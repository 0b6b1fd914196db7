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

#ifndef PR2_KERNELS_H_
#define PR2_KERNELS_H_

#include <Eigen/Dense>

namespace pr2::kernels {

// Batched Stein variational directions. `particles` and `scores` hold
// N groups of `group_size` columns each; group g occupies columns
// [g * group_size, (g + 1) * group_size) and gets its own median bandwidth.
// The serial variant is the reference; the parallel variant splits groups
// across OpenMP threads and returns bit-identical results.
Eigen::MatrixXd SvgdDeltasSerial(const Eigen::MatrixXd& particles,
                                 const Eigen::MatrixXd& scores,
                                 int group_size);
Eigen::MatrixXd SvgdDeltasParallel(const Eigen::MatrixXd& particles,
                                   const Eigen::MatrixXd& scores,
                                   int group_size);

// Row-wise log-sum-exp of a matrix, one result per row.
Eigen::VectorXd RowLogSumExpSerial(const Eigen::MatrixXd& values);
Eigen::VectorXd RowLogSumExpParallel(const Eigen::MatrixXd& values);

// Number of threads the parallel variants will use.
int MaxThreads();

}  // namespace pr2::kernels

#endif  // PR2_KERNELS_H_
