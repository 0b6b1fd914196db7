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

#include <omp.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "pr2/actor_critic.h"
#include "pr2/amortized_sampler.h"
#include "pr2/experiment.h"
#include "pr2/kernels.h"
#include "pr2/numeric_error.h"
#include "pr2/pr2ac.h"
#include "pr2/quadratic_game.h"
#include "pr2/svgd.h"

namespace pr2 {
namespace {

ContinuousAgentSpec DiffSpec() {
  ContinuousAgentSpec spec;
  spec.state_dim = 1;
  spec.own = {-10.0, 10.0};
  spec.opponents = {{-10.0, 10.0}};
  return spec;
}

Pr2acOptions SmallOptions() {
  Pr2acOptions o;
  o.hidden = {16, 16};
  o.particles = 4;
  o.batch_size = 8;
  return o;
}

AgentExperience Experience(double own, double opp, double reward) {
  return {State{0, {0.0}}, own, {opp}, reward, State{0, {0.0}}};
}

// Writes W (out x in, column-major in the flat vector) and b of one layer.
void SetLayer(Mlp& net, int layer, const Eigen::MatrixXd& w,
              const Eigen::VectorXd& b) {
  std::span<double> p = net.mutable_parameters();
  const int in = net.layer_sizes()[layer];
  const int out = net.layer_sizes()[layer + 1];
  std::size_t off = 0;
  for (int l = 0; l < layer; ++l) {
    off += static_cast<std::size_t>(net.layer_sizes()[l] + 1) *
           net.layer_sizes()[l + 1];
  }
  for (int c = 0; c < in; ++c) {
    for (int r = 0; r < out; ++r) p[off + c * out + r] = w(r, c);
  }
  for (int r = 0; r < out; ++r) p[off + in * out + r] = b(r);
}

void ZeroNet(Mlp& net) {
  for (double& v : net.mutable_parameters()) v = 0.0;
}

// Critic -|u - u_star| in the normalized own action u, built from two
// rectifiers and passed unchanged through the second hidden layer.
void SetVeeCritic(Mlp& critic, double u_star) {
  ZeroNet(critic);
  const int h1 = critic.layer_sizes()[1];
  const int h2 = critic.layer_sizes()[2];
  Eigen::MatrixXd w0 = Eigen::MatrixXd::Zero(h1, 3);
  Eigen::VectorXd b0 = Eigen::VectorXd::Zero(h1);
  w0(0, 1) = 1.0;
  b0(0) = -u_star;
  w0(1, 1) = -1.0;
  b0(1) = u_star;
  SetLayer(critic, 0, w0, b0);
  Eigen::MatrixXd w1 = Eigen::MatrixXd::Zero(h2, h1);
  w1(0, 0) = 1.0;
  w1(1, 1) = 1.0;
  SetLayer(critic, 1, w1, Eigen::VectorXd::Zero(h2));
  Eigen::MatrixXd w2 = Eigen::MatrixXd::Zero(1, h2);
  w2(0, 0) = -1.0;
  w2(0, 1) = -1.0;
  SetLayer(critic, 2, w2, Eigen::VectorXd::Zero(1));
}

// Independent Stein direction with an explicit double loop.
Eigen::MatrixXd NaiveSvgd(const Eigen::MatrixXd& a, const Eigen::MatrixXd& s,
                          double h) {
  const Eigen::Index m = a.cols();
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(a.rows(), m);
  for (Eigen::Index j = 0; j < m; ++j) {
    for (Eigen::Index k = 0; k < m; ++k) {
      double sq = 0.0;
      for (Eigen::Index d = 0; d < a.rows(); ++d) {
        sq += (a(d, k) - a(d, j)) * (a(d, k) - a(d, j));
      }
      const double kappa = std::exp(-sq / h);
      for (Eigen::Index d = 0; d < a.rows(); ++d) {
        out(d, j) += kappa * s(d, k) - 2.0 / h * kappa * (a(d, k) - a(d, j));
      }
    }
  }
  return out / static_cast<double>(m);
}

TEST_CASE("svgd with one particle is plain gradient ascent") {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(2, 1);
    Eigen::MatrixXd s = 5.0 * Eigen::MatrixXd::Random(2, 1);
    Eigen::MatrixXd d = SvgdDelta(a, s);
    CHECK((d - s).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("svgd repulsion") {
  Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(1, 2);
  Eigen::MatrixXd same(1, 2);
  same << 0.4, 0.4;
  CHECK(SvgdDelta(same, zero).cwiseAbs().maxCoeff() == 0.0);
  Eigen::MatrixXd apart(1, 2);
  apart << -1.0, 1.0;
  Eigen::MatrixXd d = SvgdDelta(apart, zero);
  CHECK(d(0, 0) < 0.0);
  CHECK(d(0, 1) > 0.0);
  CHECK(d(0, 0) == doctest::Approx(-d(0, 1)).epsilon(1e-14));
}

TEST_CASE("svgd agrees with an explicit double loop") {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const int m = 2 + t;
    Eigen::MatrixXd a = Eigen::MatrixXd::Random(2, m);
    Eigen::MatrixXd s = Eigen::MatrixXd::Random(2, m);
    const double h = 0.3 + 0.1 * t;
    Eigen::MatrixXd d = SvgdDelta(a, s, h);
    CHECK((d - NaiveSvgd(a, s, h)).cwiseAbs().maxCoeff() < 1e-13);
  }
}

TEST_CASE("svgd rejects non-finite scores") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(1, 2);
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(1, 2);
  s(0, 1) = std::nan("");
  CHECK_THROWS_AS(SvgdDelta(a, s), NumericalError);
}

TEST_CASE("median bandwidth") {
  Eigen::MatrixXd same = Eigen::MatrixXd::Constant(1, 3, 0.2);
  CHECK(MedianBandwidth(same) == 1.0);
  Eigen::MatrixXd two(1, 2);
  two << 0.0, 1.0;
  // Squared distances {0, 1, 1, 0}; median 0.5.
  CHECK(MedianBandwidth(two) == doctest::Approx(0.5 / std::log(3.0)));
}

TEST_CASE("serial and parallel kernels are bit-identical") {
  Eigen::MatrixXd a = Eigen::MatrixXd::Random(1, 64 * 8);
  Eigen::MatrixXd s = Eigen::MatrixXd::Random(1, 64 * 8);
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
  Eigen::MatrixXd serial = kernels::SvgdDeltasSerial(a, s, 8);
  Eigen::MatrixXd parallel = kernels::SvgdDeltasParallel(a, s, 8);
  Eigen::MatrixXd q = 30.0 * Eigen::MatrixXd::Random(50, 40);
  Eigen::VectorXd lse_serial = kernels::RowLogSumExpSerial(q);
  Eigen::VectorXd lse_parallel = kernels::RowLogSumExpParallel(q);
  omp_set_num_threads(saved);
  CHECK(serial == parallel);
  CHECK(lse_serial == lse_parallel);
  for (int g = 0; g < 64; ++g) {
    Eigen::MatrixXd one = SvgdDelta(a.middleCols(g * 8, 8), s.middleCols(g * 8, 8));
    CHECK(one == serial.middleCols(g * 8, 8));
  }
}

TEST_CASE("sampler draws") {
  Rng init(1);
  AmortizedSampler sampler(2, 1, 1, {8, 8}, 1e-3, init);
  ZeroNet(sampler.mutable_generator());
  Rng rng(2);
  const ContinuousAgentSpec spec = DiffSpec();
  std::vector<std::vector<double>> one = SampleOpponents(sampler, {0.0}, 3.0, spec, 1, rng);
  REQUIRE(one.size() == 1);
  CHECK(one[0][0] == 0.0);

  Rng init2(1);
  AmortizedSampler live(2, 1, 1, {8, 8}, 1e-3, init2);
  Rng r1(9), r2(9);
  CHECK(SampleOpponents(live, {0.0}, 1.0, spec, 16, r1) ==
        SampleOpponents(live, {0.0}, 1.0, spec, 16, r2));
  Rng r3(9);
  for (const auto& a : SampleOpponents(live, {0.0}, 1.0, spec, 1000, r3)) {
    CHECK(a[0] >= -10.0);
    CHECK(a[0] <= 10.0);
  }
}

TEST_CASE("zero deltas leave the generator unchanged") {
  Rng init(4);
  AmortizedSampler sampler(2, 1, 1, {8, 8}, 1e-3, init);
  const std::vector<double> before(sampler.generator().parameters().begin(),
                                   sampler.generator().parameters().end());
  Rng rng(5);
  ParticleBatch batch = sampler.Sample(Eigen::MatrixXd::Zero(2, 3), 4, rng);
  sampler.AmortizeStep(batch, Eigen::MatrixXd::Zero(1, 12));
  CHECK(std::equal(before.begin(), before.end(),
                   sampler.generator().parameters().begin()));
}

// Mean of the sampler output under a fixed evaluation noise set.
double SamplerMean(const AmortizedSampler& sampler, int draws) {
  Rng rng(12345);
  ParticleBatch b = sampler.Sample(Eigen::MatrixXd::Zero(2, 1), draws, rng);
  return b.particles.mean();
}

// Amortized SVGD toward exp(tau * Q) with Q(u) = -k (u - u_star)^2, whose
// density is a Gaussian centred on u_star.
struct QuadraticTraining {
  std::vector<double> distances;  // every 50 steps, starting before training
  double final_mean = 0.0;
};

QuadraticTraining TrainOnQuadratic(double u_star, std::uint64_t seed) {
  const double tau = 0.5;
  const double k = 10.0;
  Rng init(seed);
  AmortizedSampler sampler(2, 1, 1, {100, 100}, 1e-3, init);
  Rng rng(seed + 1);
  QuadraticTraining out;
  const Eigen::MatrixXd contexts = Eigen::MatrixXd::Zero(2, 8);
  for (int step = 0; step <= 500; ++step) {
    if (step % 50 == 0) {
      out.distances.push_back(std::abs(SamplerMean(sampler, 2000) - u_star));
    }
    if (step == 500) break;
    ParticleBatch batch = sampler.Sample(contexts, 32, rng);
    const Eigen::MatrixXd scores =
        tau * (-2.0 * k * (batch.particles.array() - u_star)).matrix();
    sampler.AmortizeStep(batch, kernels::SvgdDeltasSerial(batch.particles, scores, 32));
  }
  out.final_mean = SamplerMean(sampler, 10000);
  return out;
}

TEST_CASE("amortized svgd converges to the maximizer of a quadratic critic") {
  for (double u_star : {0.3, -0.5}) {
    QuadraticTraining t = TrainOnQuadratic(u_star, 21);
    CHECK(std::abs(t.final_mean - u_star) < 0.05);
    // Monotone approach until the 0.05 band is reached, then no escape.
    bool inside = false;
    for (std::size_t i = 1; i < t.distances.size(); ++i) {
      if (inside) {
        CHECK(t.distances[i] < 0.05);
      } else {
        CHECK(t.distances[i] <= t.distances[i - 1]);
      }
      inside = inside || t.distances[i] < 0.05;
    }
    CHECK(inside);
  }
}

TEST_CASE("amortized svgd is deterministic") {
  CHECK(TrainOnQuadratic(0.3, 8).final_mean == TrainOnQuadratic(0.3, 8).final_mean);
}

TEST_CASE("soft update") {
  std::vector<double> online = {1.0, 2.0};
  std::vector<double> target = {0.0, 0.0};
  SoftUpdate(online, target, 0.01);
  CHECK(target[0] == doctest::Approx(0.01).epsilon(1e-15));
  std::vector<double> copy = {5.0, 5.0};
  SoftUpdate(online, copy, 1.0);
  CHECK(copy == online);
  std::vector<double> kept = {5.0, 6.0};
  SoftUpdate(online, kept, 0.0);
  CHECK(kept == std::vector<double>{5.0, 6.0});
  std::vector<double> wrong = {0.0};
  CHECK_THROWS_AS(SoftUpdate(online, wrong, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(SoftUpdate(online, target, 1.5), std::invalid_argument);
}

TEST_CASE("critic target trivial cases") {
  Pr2acOptions o = SmallOptions();
  o.gamma = 0.0;
  Pr2acAgent agent(DiffSpec(), o, 1);
  std::vector<AgentExperience> batch = {Experience(1.0, -2.0, 0.7),
                                        Experience(-4.0, 3.0, -1.5)};
  Eigen::VectorXd y = agent.CriticTarget(batch);
  CHECK(y(0) == 0.7);
  CHECK(y(1) == -1.5);

  o.gamma = 0.9;
  o.particles = 1;
  Pr2acAgent zero(DiffSpec(), o, 1);
  ZeroNet(zero.mutable_target_critic());
  y = zero.CriticTarget(batch);
  CHECK(y(0) == 0.7);
  CHECK(y(1) == -1.5);
}

TEST_CASE("critic target matches a hand evaluation") {
  Pr2acOptions o = SmallOptions();
  o.hidden = {3};
  o.particles = 1;
  o.gamma = 0.9;
  Pr2acAgent agent(DiffSpec(), o, 17);
  // Detach the generator from its noise input so the particle is fixed.
  Mlp& gen = agent.mutable_sampler().mutable_generator();
  std::span<double> gp = gen.mutable_parameters();
  for (int r = 0; r < 3; ++r) gp[2 * 3 + r] = 0.0;

  const double s2 = 0.0;
  AgentExperience e = Experience(2.0, -3.0, 1.25);
  const double own = std::tanh(testing::NaiveForward(agent.target_actor(), {s2})[0]);
  const double opp = std::tanh(testing::NaiveForward(gen, {s2, own, 0.0})[0]);
  const double q = testing::NaiveForward(agent.target_critic(), {s2, own, opp})[0];
  const double expected = 1.25 + 0.9 * q;
  CHECK(std::abs(agent.CriticTarget({e})(0) - expected) < 1e-12);
}

TEST_CASE("critic target variance shrinks with more particles") {
  auto spread = [](int m) {
    Pr2acOptions o = SmallOptions();
    o.particles = m;
    Pr2acAgent agent(DiffSpec(), o, 33);
    std::vector<double> ys;
    for (int t = 0; t < 200; ++t) {
      ys.push_back(agent.CriticTarget({Experience(0.0, 0.0, 0.0)})(0));
    }
    double mean = 0.0;
    for (double y : ys) mean += y / ys.size();
    double var = 0.0;
    for (double y : ys) var += (y - mean) * (y - mean) / (ys.size() - 1);
    return var;
  };
  const double v1 = spread(1);
  const double v64 = spread(64);
  CHECK(v1 > 0.0);
  CHECK(v1 > v64);
}

TEST_CASE("critic step") {
  Pr2acOptions o = SmallOptions();
  std::vector<AgentExperience> batch;
  for (int j = 0; j < 8; ++j) {
    batch.push_back(Experience(-8.0 + 2.0 * j, 6.0 - 1.5 * j, 0.3 * j - 1.0));
  }

  SUBCASE("targets equal to the critic leave it unchanged") {
    Pr2acAgent agent(DiffSpec(), o, 2);
    Eigen::MatrixXd x(3, 8);
    for (int j = 0; j < 8; ++j) {
      x(0, j) = 0.0;
      x(1, j) = batch[j].own_action / 10.0;
      x(2, j) = batch[j].opponent_actions[0] / 10.0;
    }
    Eigen::VectorXd y = agent.critic().Forward(x).row(0).transpose();
    const std::vector<double> before(agent.critic().parameters().begin(),
                                     agent.critic().parameters().end());
    CHECK(agent.CriticStep(batch, y) == 0.0);
    CHECK(std::equal(before.begin(), before.end(),
                     agent.critic().parameters().begin()));
  }

  SUBCASE("loss decreases on a fixed batch") {
    Pr2acAgent agent(DiffSpec(), o, 2);
    Eigen::VectorXd y(8);
    for (int j = 0; j < 8; ++j) y(j) = batch[j].reward;
    const double first = agent.CriticStep(batch, y);
    double last = first;
    for (int t = 0; t < 100; ++t) last = agent.CriticStep(batch, y);
    CHECK(last < 0.5 * first);
  }

  SUBCASE("gradient matches finite differences of the loss") {
    Pr2acAgent agent(DiffSpec(), o, 2);
    Eigen::VectorXd y(8);
    for (int j = 0; j < 8; ++j) y(j) = batch[j].reward;
    Mlp critic = agent.critic();
    auto loss = [&](const Mlp& net) {
      double l = 0.0;
      for (int j = 0; j < 8; ++j) {
        const double q = testing::NaiveForward(
            net, {0.0, batch[j].own_action / 10.0,
                  batch[j].opponent_actions[0] / 10.0})[0];
        l += (y(j) - q) * (y(j) - q) / 8.0;
      }
      return l;
    };
    agent.CriticStep(batch, y);
    // After one step the first Adam moment is (1 - beta1) * gradient.
    std::span<const double> m = agent.critic_optimizer().first_moment();
    const double beta1 = agent.critic_optimizer().options().beta1;
    double worst = 0.0;
    std::span<double> p = critic.mutable_parameters();
    for (std::size_t k = 0; k < p.size(); k += 7) {
      const double saved = p[k];
      const double h = 1e-6;
      p[k] = saved + h;
      const double up = loss(critic);
      p[k] = saved - h;
      const double down = loss(critic);
      p[k] = saved;
      worst = std::max(worst, testing::RelativeError(m[k] / (1.0 - beta1),
                                                     (up - down) / (2 * h)));
    }
    CHECK(worst < 1e-4);
  }
}

TEST_CASE("actor step") {
  Pr2acOptions o = SmallOptions();
  std::vector<AgentExperience> batch(8, Experience(0.0, 0.0, 0.0));

  SUBCASE("a critic constant in the own action gives a zero gradient") {
    Pr2acAgent agent(DiffSpec(), o, 4);
    ZeroNet(agent.mutable_critic());
    const std::vector<double> before(agent.actor().parameters().begin(),
                                     agent.actor().parameters().end());
    Eigen::VectorXd d = agent.ActorStep(batch);
    CHECK(d.cwiseAbs().maxCoeff() == 0.0);
    CHECK(std::equal(before.begin(), before.end(),
                     agent.actor().parameters().begin()));
  }

  SUBCASE("the actor climbs a critic peaked at 3") {
    o.actor_lr = 1e-3;
    o.particles = 32;
    Pr2acAgent agent(DiffSpec(), o, 4);
    SetVeeCritic(agent.mutable_critic(), 0.3);
    const State s{0, {0.0}};
    double dist = std::abs(agent.PolicyMean(s) - 3.0);
    bool monotone = true;
    bool inside = false;
    for (int t = 0; t < 400; ++t) {
      agent.ActorStep(batch);
      const double next = std::abs(agent.PolicyMean(s) - 3.0);
      // Monotone until the first entry into the 0.3 band, then no escape.
      if (inside ? next >= 0.3 : next > dist) monotone = false;
      inside = inside || next < 0.3;
      dist = next;
    }
    CHECK(monotone);
    CHECK(dist < 0.3);
  }
}

TEST_CASE("learning is deterministic under a fixed seed") {
  auto train = [] {
    Pr2acAgent agent(DiffSpec(), SmallOptions(), 77);
    Rng rng(1);
    for (int t = 0; t < 30; ++t) {
      const double a = agent.Act(State{0, {0.0}});
      const double b = 10.0 * (2.0 * Uniform01(rng) - 1.0);
      agent.Observe(Experience(a, b, DiffReward(a, b)));
      agent.Learn();
    }
    return agent.Parameters();
  };
  const std::vector<double> first = train();
  const std::vector<double> second = train();
  REQUIRE(first.size() == second.size());
  std::size_t mismatches = 0;
  for (std::size_t k = 0; k < first.size(); ++k) {
    if (first[k] != second[k]) {
      ++mismatches;
    }
  }
  CHECK(mismatches == 0);
}

TEST_CASE("targets stay inside the hull of past online parameters") {
  Pr2acOptions o = SmallOptions();
  o.target_rate = 0.05;
  o.critic_lr = 1e-2;
  o.actor_lr = 1e-2;
  Pr2acAgent agent(DiffSpec(), o, 5);
  auto inf_norm = [](const Mlp& n) {
    double v = 0.0;
    for (double x : n.parameters()) v = std::max(v, std::abs(x));
    return v;
  };
  double actor_max = inf_norm(agent.actor());
  double critic_max = inf_norm(agent.critic());
  Rng rng(2);
  for (int t = 0; t < 60; ++t) {
    const double a = agent.Act(State{0, {0.0}});
    const double b = 10.0 * (2.0 * Uniform01(rng) - 1.0);
    agent.Observe(Experience(a, b, DiffReward(a, b)));
    agent.Learn();
    actor_max = std::max(actor_max, inf_norm(agent.actor()));
    critic_max = std::max(critic_max, inf_norm(agent.critic()));
    CHECK(inf_norm(agent.target_actor()) <= actor_max + 1e-12);
    CHECK(inf_norm(agent.target_critic()) <= critic_max + 1e-12);
  }
  CHECK(agent.target_actor().layer_sizes() == agent.actor().layer_sizes());
  CHECK(agent.target_critic().layer_sizes() == agent.critic().layer_sizes());
}

// Test double that forwards to a real learner and fails any read of its
// parameters while play is under way.
class AuditedLearner : public ContinuousLearner {
 public:
  explicit AuditedLearner(std::unique_ptr<ContinuousLearner> inner)
      : inner_(std::move(inner)) {}

  std::string name() const override { return inner_->name(); }
  double Act(const State& s) override {
    last_action = inner_->Act(s);
    actions.push_back(last_action);
    return last_action;
  }
  double PolicyMean(const State& s) const override { return inner_->PolicyMean(s); }
  void Observe(const AgentExperience& e) override {
    observed.push_back(e);
    inner_->Observe(e);
  }
  void Learn() override { inner_->Learn(); }
  std::vector<double> Parameters() const override {
    ++parameter_reads;
    return inner_->Parameters();
  }

  double last_action = 0.0;
  std::vector<double> actions;
  std::vector<AgentExperience> observed;
  mutable int parameter_reads = 0;

 private:
  std::unique_ptr<ContinuousLearner> inner_;
};

TEST_CASE("play never reads another agent's parameters") {
  const MaxOfTwoQuadraticGame game(0.9);
  AuditedLearner a(std::make_unique<Pr2acAgent>(DiffSpec(), SmallOptions(), 1));
  AuditedLearner b(std::make_unique<Pr2acAgent>(DiffSpec(), SmallOptions(), 2));
  std::vector<double> means;
  PlayContinuous({&a, &b}, game, 4, 5, [&](int, const State& s) {
    means.push_back(a.PolicyMean(s));
    means.push_back(b.PolicyMean(s));
  });
  CHECK(a.parameter_reads == 0);
  CHECK(b.parameter_reads == 0);
  REQUIRE(a.observed.size() == 20);
  for (std::size_t t = 0; t < 20; ++t) {
    const AgentExperience& ea = a.observed[t];
    const AgentExperience& eb = b.observed[t];
    CHECK(ea.own_action == a.actions[t]);
    CHECK(ea.opponent_actions == std::vector<double>{b.actions[t]});
    CHECK(eb.opponent_actions == std::vector<double>{a.actions[t]});
    CHECK(ea.reward == DiffReward(a.actions[t], b.actions[t]));
  }
  for (double x : a.actions) CHECK(std::abs(x) <= 10.0);
  for (double x : b.actions) CHECK(std::abs(x) <= 10.0);
  for (double x : means) CHECK(std::abs(x) <= 10.0);
}

TEST_CASE("zero training steps record only the initial policy") {
  const MaxOfTwoQuadraticGame game(0.9);
  Pr2acAgent a(DiffSpec(), Pr2acOptions{}, 1);
  Pr2acAgent b(DiffSpec(), Pr2acOptions{}, 2);
  std::vector<int> seen;
  PlayContinuous({&a, &b}, game, 0, 25, [&](int it, const State& s) {
    seen.push_back(it);
    CHECK(std::abs(a.PolicyMean(s)) < 1.0);
    CHECK(std::abs(b.PolicyMean(s)) < 1.0);
  });
  CHECK(seen == std::vector<int>{0});
  CHECK(a.buffer().empty());
}

TEST_CASE("options validation") {
  Pr2acOptions o;
  o.particles = 0;
  CHECK_THROWS_AS(o.Validate(), std::invalid_argument);
  o = Pr2acOptions{};
  o.target_rate = 0.0;
  CHECK_THROWS_AS(o.Validate(), std::invalid_argument);
}

}  // namespace
}  // namespace pr2
