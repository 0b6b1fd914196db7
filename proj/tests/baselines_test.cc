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

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <memory>
#include <vector>

#include "doctest.h"
#include "pr2/ddpg.h"
#include "pr2/experiment.h"
#include "pr2/iga.h"
#include "pr2/matrix_game.h"
#include "pr2/quadratic_game.h"
#include "pr2/sga.h"

namespace pr2 {
namespace {

double Radius(const IgaState& s) { return std::hypot(s.p - 0.5, s.q - 0.5); }

TEST_CASE("iga steps") {
  const MatrixGame game;
  IgaState center = IgaStep({0.5, 0.5}, game, 0.1);
  CHECK(center.p == 0.5);
  CHECK(center.q == 0.5);
  IgaState s = IgaStep({0.5, 0.9}, game, 0.1);
  CHECK(s.p == doctest::Approx(0.42).epsilon(1e-14));
  CHECK(s.q == doctest::Approx(0.9).epsilon(1e-14));
  IgaState clamped = IgaStep({0.99, 0.01}, game, 1.0);
  CHECK(clamped.p == 1.0);
  CHECK(clamped.q == doctest::Approx(0.99).epsilon(1e-14));
}

TEST_CASE("iga follows the payoff gradient field") {
  const MatrixGame game;
  const double h = 1e-6;
  for (double p : {0.2, 0.45, 0.7}) {
    for (double q : {0.3, 0.5, 0.8}) {
      const IgaState next = IgaStep({p, q}, game, 1e-3);
      const double fp = (game.ExpectedPayoffs(p + h, q).first -
                         game.ExpectedPayoffs(p - h, q).first) / (2 * h);
      const double fq = (game.ExpectedPayoffs(p, q + h).second -
                         game.ExpectedPayoffs(p, q - h).second) / (2 * h);
      CHECK((next.p - p) / 1e-3 == doctest::Approx(fp).epsilon(1e-6));
      CHECK((next.q - q) / 1e-3 == doctest::Approx(fq).epsilon(1e-6));
      CHECK(fp == doctest::Approx(1.0 - 2.0 * q).epsilon(1e-6));
      CHECK(fq == doctest::Approx(2.0 * p - 1.0).epsilon(1e-6));
    }
  }
}

TEST_CASE("iga orbit drift is second order in the step size") {
  const MatrixGame game;
  std::vector<double> fitted;
  for (double eta : {0.02, 0.01, 0.005}) {
    IgaState s{0.7, 0.7};
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const IgaState n = IgaStep(s, game, eta);
      const double r2 = Radius(s) * Radius(s);
      const double growth = Radius(n) * Radius(n) - r2;
      CHECK(growth >= 0.0);
      worst = std::max(worst, growth / (eta * eta * r2));
      s = n;
    }
    fitted.push_back(worst);
  }
  // The same constant bounds every step size.
  for (double c : fitted) CHECK(c == doctest::Approx(fitted.front()).epsilon(0.01));
  CHECK(fitted.front() == doctest::Approx(4.0).epsilon(0.01));
}

TEST_CASE("iga rotates instead of converging") {
  const MatrixGame game;
  IgaState s{0.9, 0.9};
  double d100 = 0.0;
  bool quadrant[4] = {false, false, false, false};
  for (int t = 1; t <= 500; ++t) {
    s = IgaStep(s, game, 0.01);
    if (t == 100) d100 = Radius(s);
    const double dp = s.p - 0.5;
    const double dq = s.q - 0.5;
    if (dp != 0.0 && dq != 0.0) quadrant[(dp > 0) + 2 * (dq > 0)] = true;
  }
  const double ratio = Radius(s) / d100;
  CHECK(ratio >= 0.9);
  CHECK(ratio <= 1.1);
  CHECK(std::all_of(quadrant, quadrant + 4, [](bool b) { return b; }));
}

TwoPlayerPayoff DiffPayoff() {
  return [](int, double x, double y) {
    return std::max(MaxOfTwoQuadraticGame::BroadBranch(x, y),
                    MaxOfTwoQuadraticGame::NarrowBranch(x, y));
  };
}

TEST_CASE("sga reduces to gradient ascent on an identical-interest game") {
  const PieceIndex piece = &MaxOfTwoQuadraticGame::ActiveBranch;
  SgaOptions o;
  for (const auto& [x, y] : std::vector<std::array<double, 2>>{
           {0.0, 0.0}, {-3.0, 2.0}, {6.0, 4.0}, {-8.0, -1.0}}) {
    SgaDiagnostics d;
    SgaStep(Eigen::Vector2d(x, y), DiffPayoff(), piece, o, &d);
    CHECK(d.adjustment.norm() < 1e-6);
    CHECK((d.jacobian - d.jacobian.transpose()).norm() < 1e-4);
  }
}

TEST_CASE("sga gradient matches the broad branch off the ridge") {
  const PieceIndex piece = &MaxOfTwoQuadraticGame::ActiveBranch;
  bool one_sided = false;
  Eigen::Vector2d g = SimultaneousGradient(DiffPayoff(), piece, 0.0, 0.0, 1e-4, &one_sided);
  // d/dx of 0.8 * (-((x + 5) / 3)^2) at 0.
  CHECK(g(0) == doctest::Approx(-0.8 * 2.0 * 5.0 / 9.0).epsilon(1e-6));
  CHECK(g(1) == doctest::Approx(g(0)).epsilon(1e-9));
  CHECK_FALSE(one_sided);
}

TEST_CASE("sga falls into the local basin from the origin") {
  const PieceIndex piece = &MaxOfTwoQuadraticGame::ActiveBranch;
  SgaOptions o;
  Eigen::Vector2d x(0.0, 0.0);
  for (int t = 0; t < 350 * 25; ++t) x = SgaStep(x, DiffPayoff(), piece, o);
  CHECK((x - Eigen::Vector2d(-5.0, -5.0)).norm() < 0.5);
  const Eigen::Vector2d still =
      SgaStep(Eigen::Vector2d(-5.0, -5.0), DiffPayoff(), piece, o);
  CHECK((still - Eigen::Vector2d(-5.0, -5.0)).norm() < 1e-9);
}

TEST_CASE("sga uses one-sided differences across the ridge") {
  const PieceIndex piece = &MaxOfTwoQuadraticGame::ActiveBranch;
  // Walk along the diagonal to a point straddling the switching ridge.
  double lo = 0.0, hi = 5.0;
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (lo + hi);
    (MaxOfTwoQuadraticGame::ActiveBranch(mid, mid) == 0 ? lo : hi) = mid;
  }
  bool one_sided = false;
  SimultaneousGradient(DiffPayoff(), piece, lo, lo, 1e-4, &one_sided);
  CHECK(one_sided);
}

ContinuousAgentSpec DiffSpec() {
  ContinuousAgentSpec spec;
  spec.own = {-10.0, 10.0};
  spec.opponents = {{-10.0, 10.0}};
  return spec;
}

DdpgOptions SmallOptions(bool opponent_model) {
  DdpgOptions o;
  o.hidden = {16, 16};
  o.batch_size = 8;
  o.opponent_model = opponent_model;
  return o;
}

AgentExperience Experience(double own, double opp, double reward) {
  return {State{0, {0.0}}, own, {opp}, reward, State{0, {0.0}}};
}

TEST_CASE("ddpg critic regresses toward rewards with gamma 0") {
  for (bool om : {false, true}) {
    DdpgOptions o = SmallOptions(om);
    o.gamma = 0.0;
    DdpgAgent agent(DiffSpec(), o, 3);
    std::vector<AgentExperience> batch;
    for (int j = 0; j < 8; ++j) {
      batch.push_back(Experience(-7.0 + 2.0 * j, 1.0, 0.5 * j - 2.0));
    }
    const double first = agent.CriticStep(batch);
    double last = first;
    for (int t = 0; t < 100; ++t) last = agent.CriticStep(batch);
    CHECK(last < 0.5 * first);
  }
}

TEST_CASE("ddpg critic inputs") {
  DdpgAgent lite(DiffSpec(), SmallOptions(false), 1);
  DdpgAgent om(DiffSpec(), SmallOptions(true), 1);
  Eigen::MatrixXd states = Eigen::MatrixXd::Zero(1, 3);
  Eigen::MatrixXd own(1, 3);
  own << -0.5, 0.0, 0.5;
  CHECK(lite.critic().input_size() == 2);
  CHECK(lite.CriticInputs(states, own).rows() == 2);
  CHECK(om.critic().input_size() == 3);
  Eigen::MatrixXd x = om.CriticInputs(states, own);
  CHECK(x.topRows(2) == (Eigen::MatrixXd(2, 3) << states, own).finished());
  CHECK(x.bottomRows(1) == om.predictor().Predict(states));
}

TEST_CASE("opponent predictor learns a constant opponent") {
  DdpgAgent agent(DiffSpec(), SmallOptions(true), 5);
  for (int t = 0; t < 1000; ++t) {
    agent.Observe(Experience(0.0, 4.0, 0.0));
    agent.PredictorStep();
  }
  const double predicted =
      10.0 * agent.predictor().Predict(Eigen::MatrixXd::Zero(1, 1))(0, 0);
  CHECK(std::abs(predicted - 4.0) < 0.05);
}

TEST_CASE("ddpg learning is deterministic") {
  for (bool om : {false, true}) {
    auto train = [om] {
      DdpgAgent agent(DiffSpec(), SmallOptions(om), 11);
      for (int t = 0; t < 30; ++t) {
        const double a = agent.Act(State{0, {0.0}});
        const double b = std::sin(0.3 * t) * 9.0;
        agent.Observe(Experience(a, b, DiffReward(a, b)));
        agent.Learn();
      }
      return agent.Parameters();
    };
    CHECK(train() == train());
  }
}

class CountingLearner : public ContinuousLearner {
 public:
  explicit CountingLearner(std::unique_ptr<ContinuousLearner> inner)
      : inner_(std::move(inner)) {}
  std::string name() const override { return inner_->name(); }
  double Act(const State& s) override {
    const double a = inner_->Act(s);
    in_bounds = in_bounds && a >= -10.0 && a <= 10.0;
    return a;
  }
  double PolicyMean(const State& s) const override { return inner_->PolicyMean(s); }
  void Observe(const AgentExperience& e) override { inner_->Observe(e); }
  void Learn() override { inner_->Learn(); }
  std::vector<double> Parameters() const override {
    ++reads;
    return inner_->Parameters();
  }
  bool in_bounds = true;
  mutable int reads = 0;

 private:
  std::unique_ptr<ContinuousLearner> inner_;
};

TEST_CASE("ddpg agents are decentralized") {
  const MaxOfTwoQuadraticGame game(0.9);
  CountingLearner a(std::make_unique<DdpgAgent>(DiffSpec(), SmallOptions(false), 1));
  CountingLearner b(std::make_unique<DdpgAgent>(DiffSpec(), SmallOptions(true), 2));
  PlayContinuous({&a, &b}, game, 3, 10, [](int, const State&) {});
  CHECK(a.reads == 0);
  CHECK(b.reads == 0);
  CHECK(a.in_bounds);
  CHECK(b.in_bounds);
}

}  // namespace
}  // namespace pr2
