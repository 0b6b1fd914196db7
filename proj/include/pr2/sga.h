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

#ifndef PR2_SGA_H_
#define PR2_SGA_H_

#include <Eigen/Dense>
#include <functional>

namespace pr2 {

// Payoff of agent `agent` (0 or 1) at the joint action (x, y).
using TwoPlayerPayoff = std::function<double(int agent, double x, double y)>;
// Index of the smooth piece active at (x, y); finite differences never mix
// pieces when one is supplied.
using PieceIndex = std::function<int(double x, double y)>;

struct SgaOptions {
  double step_size = 0.01;
  double adjustment = 1.0;
  double fd_step = 1e-4;
  double lo = -10.0;
  double hi = 10.0;
};

struct SgaDiagnostics {
  Eigen::Vector2d gradient = Eigen::Vector2d::Zero();
  Eigen::Matrix2d jacobian = Eigen::Matrix2d::Zero();
  Eigen::Vector2d adjustment = Eigen::Vector2d::Zero();
  // True when some difference quotient fell back to a one-sided stencil.
  bool one_sided = false;
};

// Simultaneous gradient xi = (d r0/dx, d r1/dy) by finite differences.
Eigen::Vector2d SimultaneousGradient(const TwoPlayerPayoff& payoff,
                                     const PieceIndex& piece, double x,
                                     double y, double h, bool* one_sided);

// Game Jacobian d xi / d(x, y), differencing the gradient.
Eigen::Matrix2d GameJacobian(const TwoPlayerPayoff& payoff,
                             const PieceIndex& piece, double x, double y,
                             double h, bool* one_sided);

// One symplectic-gradient-adjustment step along xi + lambda A^T xi with
// A = (J - J^T) / 2, clamped to [lo, hi].
Eigen::Vector2d SgaStep(const Eigen::Vector2d& actions,
                        const TwoPlayerPayoff& payoff, const PieceIndex& piece,
                        const SgaOptions& options,
                        SgaDiagnostics* diagnostics = nullptr);

}  // namespace pr2

#endif  // PR2_SGA_H_
