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

#include "pr2/svgd.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pr2/numeric_error.h"

namespace pr2 {

double RbfKernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                 double h) {
  return std::exp(-(x - y).squaredNorm() / h);
}

double MedianBandwidth(const Eigen::MatrixXd& particles) {
  const Eigen::Index m = particles.cols();
  std::vector<double> sq;
  sq.reserve(static_cast<std::size_t>(m * m));
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      sq.push_back((particles.col(j) - particles.col(k)).squaredNorm());
    }
  }
  const std::size_t n = sq.size();
  const auto mid = sq.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(sq.begin(), mid, sq.end());
  double median = *mid;
  if (n % 2 == 0) median = 0.5 * (median + *std::max_element(sq.begin(), mid));
  const double h = median / std::log(static_cast<double>(m) + 1.0);
  return h > 1e-12 ? h : 1.0;
}

Eigen::MatrixXd SvgdDelta(const Eigen::MatrixXd& particles,
                          const Eigen::MatrixXd& scores, double bandwidth) {
  if (particles.rows() != scores.rows() || particles.cols() != scores.cols()) {
    throw std::invalid_argument("particles and scores differ in shape");
  }
  if (particles.cols() < 1) throw std::invalid_argument("no particles");
  if (!(bandwidth > 0.0)) throw std::invalid_argument("bandwidth must be > 0");
  if (!scores.allFinite()) {
    throw NumericalError("non-finite critic gradient in SVGD update");
  }
  const Eigen::Index m = particles.cols();
  Eigen::MatrixXd delta = Eigen::MatrixXd::Zero(particles.rows(), m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      const auto diff = particles.col(k) - particles.col(j);
      const double kappa = std::exp(-diff.squaredNorm() / bandwidth);
      // grad_{a_k} k(a_k, a_j) = -2 (a_k - a_j) / h * k.
      delta.col(j).noalias() +=
          kappa * scores.col(k) - (2.0 * kappa / bandwidth) * diff;
    }
  }
  return delta / static_cast<double>(m);
}

Eigen::MatrixXd SvgdDelta(const Eigen::MatrixXd& particles,
                          const Eigen::MatrixXd& scores) {
  return SvgdDelta(particles, scores, MedianBandwidth(particles));
}

}  // namespace pr2
