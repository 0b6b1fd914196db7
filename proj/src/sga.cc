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

#include "pr2/sga.h"

#include <algorithm>

namespace pr2 {
namespace {

// Derivative of f along one axis at t, using only stencil points on the same
// piece as t when the piece changes inside the stencil.
double Difference(const std::function<double(double)>& f,
                  const std::function<int(double)>& piece_at, double t,
                  double h, bool* one_sided) {
  if (piece_at) {
    const int center = piece_at(t);
    const bool up_ok = piece_at(t + h) == center;
    const bool down_ok = piece_at(t - h) == center;
    if (up_ok != down_ok) {
      if (one_sided != nullptr) *one_sided = true;
      return up_ok ? (f(t + h) - f(t)) / h : (f(t) - f(t - h)) / h;
    }
  }
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

}  // namespace

Eigen::Vector2d SimultaneousGradient(const TwoPlayerPayoff& payoff,
                                     const PieceIndex& piece, double x,
                                     double y, double h, bool* one_sided) {
  std::function<int(double)> piece_x, piece_y;
  if (piece) {
    piece_x = [&](double t) { return piece(t, y); };
    piece_y = [&](double t) { return piece(x, t); };
  }
  Eigen::Vector2d g;
  g(0) = Difference([&](double t) { return payoff(0, t, y); }, piece_x, x, h,
                    one_sided);
  g(1) = Difference([&](double t) { return payoff(1, x, t); }, piece_y, y, h,
                    one_sided);
  return g;
}

Eigen::Matrix2d GameJacobian(const TwoPlayerPayoff& payoff,
                             const PieceIndex& piece, double x, double y,
                             double h, bool* one_sided) {
  std::function<int(double)> piece_x, piece_y;
  if (piece) {
    piece_x = [&](double t) { return piece(t, y); };
    piece_y = [&](double t) { return piece(x, t); };
  }
  Eigen::Matrix2d j;
  for (int row = 0; row < 2; ++row) {
    j(row, 0) = Difference(
        [&](double t) {
          return SimultaneousGradient(payoff, piece, t, y, h, one_sided)(row);
        },
        piece_x, x, h, one_sided);
    j(row, 1) = Difference(
        [&](double t) {
          return SimultaneousGradient(payoff, piece, x, t, h, one_sided)(row);
        },
        piece_y, y, h, one_sided);
  }
  return j;
}

Eigen::Vector2d SgaStep(const Eigen::Vector2d& actions,
                        const TwoPlayerPayoff& payoff, const PieceIndex& piece,
                        const SgaOptions& options,
                        SgaDiagnostics* diagnostics) {
  bool one_sided = false;
  const double x = actions(0);
  const double y = actions(1);
  const Eigen::Vector2d xi =
      SimultaneousGradient(payoff, piece, x, y, options.fd_step, &one_sided);
  const Eigen::Matrix2d jac =
      GameJacobian(payoff, piece, x, y, options.fd_step, &one_sided);
  const Eigen::Matrix2d antisym = 0.5 * (jac - jac.transpose());
  const Eigen::Vector2d adjust = options.adjustment * antisym.transpose() * xi;
  Eigen::Vector2d next = actions + options.step_size * (xi + adjust);
  next(0) = std::clamp(next(0), options.lo, options.hi);
  next(1) = std::clamp(next(1), options.lo, options.hi);
  if (diagnostics != nullptr) {
    diagnostics->gradient = xi;
    diagnostics->jacobian = jac;
    diagnostics->adjustment = adjust;
    diagnostics->one_sided = one_sided;
  }
  return next;
}

}  // namespace pr2
