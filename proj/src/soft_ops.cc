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

#include "pr2/soft_ops.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pr2 {
namespace {

void CheckRow(std::span<const double> x) {
  if (x.empty()) throw std::invalid_argument("empty value row");
  for (double v : x) {
    if (!std::isfinite(v)) throw std::invalid_argument("non-finite value row");
  }
}

}  // namespace

double LogSumExp(std::span<const double> x) {
  CheckRow(x);
  const double m = *std::max_element(x.begin(), x.end());
  double acc = 0.0;
  for (double v : x) acc += std::exp(v - m);
  return m + std::log(acc);
}

std::vector<double> Softmax(std::span<const double> x, double beta) {
  CheckRow(x);
  std::vector<double> out(x.size());
  double m = beta * x[0];
  for (double v : x) m = std::max(m, beta * v);
  double total = 0.0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    out[k] = std::exp(beta * x[k] - m);
    total += out[k];
  }
  for (double& v : out) v /= total;
  return out;
}

std::vector<double> OpponentConditional(std::span<const double> q_row) {
  const double marginal = SoftMarginal(q_row);
  std::vector<double> rho(q_row.size());
  double total = 0.0;
  for (std::size_t k = 0; k < q_row.size(); ++k) {
    rho[k] = std::exp(q_row[k] - marginal);
    total += rho[k];
  }
  // exp(Q - log sum exp Q) already sums to one up to rounding; dividing by
  // the computed total removes that last ulp of drift.
  for (double& v : rho) v /= total;
  return rho;
}

}  // namespace pr2
