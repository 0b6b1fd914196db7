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

#include "pr2/kernels.h"

#include <omp.h>

#include <cmath>
#include <exception>
#include <stdexcept>

#include "pr2/svgd.h"

namespace pr2::kernels {
namespace {

Eigen::Index CheckGroups(const Eigen::MatrixXd& particles,
                         const Eigen::MatrixXd& scores, int group_size) {
  if (group_size < 1) throw std::invalid_argument("group size must be >= 1");
  if (particles.rows() != scores.rows() || particles.cols() != scores.cols()) {
    throw std::invalid_argument("particles and scores differ in shape");
  }
  if (particles.cols() % group_size != 0) {
    throw std::invalid_argument("column count is not a multiple of group size");
  }
  return particles.cols() / group_size;
}

void GroupDelta(const Eigen::MatrixXd& particles, const Eigen::MatrixXd& scores,
                int group_size, Eigen::Index g, Eigen::MatrixXd& out) {
  const Eigen::Index c0 = g * group_size;
  const Eigen::MatrixXd p = particles.middleCols(c0, group_size);
  out.middleCols(c0, group_size) =
      SvgdDelta(p, scores.middleCols(c0, group_size), MedianBandwidth(p));
}

double RowLse(const Eigen::MatrixXd& values, Eigen::Index r) {
  const double m = values.row(r).maxCoeff();
  return m + std::log((values.row(r).array() - m).exp().sum());
}

}  // namespace

Eigen::MatrixXd SvgdDeltasSerial(const Eigen::MatrixXd& particles,
                                 const Eigen::MatrixXd& scores,
                                 int group_size) {
  const Eigen::Index groups = CheckGroups(particles, scores, group_size);
  Eigen::MatrixXd out(particles.rows(), particles.cols());
  for (Eigen::Index g = 0; g < groups; ++g) {
    GroupDelta(particles, scores, group_size, g, out);
  }
  return out;
}

Eigen::MatrixXd SvgdDeltasParallel(const Eigen::MatrixXd& particles,
                                   const Eigen::MatrixXd& scores,
                                   int group_size) {
  const Eigen::Index groups = CheckGroups(particles, scores, group_size);
  Eigen::MatrixXd out(particles.rows(), particles.cols());
  std::exception_ptr error;
#pragma omp parallel for schedule(static)
  for (Eigen::Index g = 0; g < groups; ++g) {
    try {
      GroupDelta(particles, scores, group_size, g, out);
    } catch (...) {
#pragma omp critical(pr2_svgd_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

Eigen::VectorXd RowLogSumExpSerial(const Eigen::MatrixXd& values) {
  Eigen::VectorXd out(values.rows());
  for (Eigen::Index r = 0; r < values.rows(); ++r) out(r) = RowLse(values, r);
  return out;
}

Eigen::VectorXd RowLogSumExpParallel(const Eigen::MatrixXd& values) {
  Eigen::VectorXd out(values.rows());
#pragma omp parallel for schedule(static)
  for (Eigen::Index r = 0; r < values.rows(); ++r) out(r) = RowLse(values, r);
  return out;
}

int MaxThreads() { return omp_get_max_threads(); }

}  // namespace pr2::kernels
