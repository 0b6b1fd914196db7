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

#include "pr2/experiment.h"

#include <omp.h>

#include <array>
#include <chrono>
#include <cmath>
#include <memory>
#include <stdexcept>

#include "pr2/ddpg.h"
#include "pr2/iga.h"
#include "pr2/matrix_game.h"
#include "pr2/numeric_error.h"
#include "pr2/pr2ac.h"
#include "pr2/pr2q.h"
#include "pr2/quadratic_game.h"
#include "pr2/rng.h"
#include "pr2/sga.h"

namespace pr2 {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::array<double, 2> kMatrixCenter = {0.5, 0.5};

// Appends the rows of one run and tracks its final point.
class Recorder {
 public:
  Recorder(const ExperimentConfig& config, RunOutcome& out)
      : config_(config), out_(out), start_(Clock::now()) {}

  void Matrix(int iteration, double p, double q, const MatrixGame& game) {
    if (!std::isfinite(p) || !std::isfinite(q)) {
      throw NumericalError("non-finite policy at iteration " +
                           std::to_string(iteration));
    }
    const auto [u1, u2] = game.ExpectedPayoffs(p, q);
    if (!std::isfinite(u1) || !std::isfinite(u2)) {
      throw NumericalError("non-finite expected payoff at iteration " +
                           std::to_string(iteration));
    }
    const std::array<double, 2> point = {p, q};
    const double dist = DistanceTo(point, kMatrixCenter);
    const std::optional<double> wall = Wall();
    const double rewards[2] = {u1, u2};
    for (int agent = 0; agent < 2; ++agent) {
      RunRecord r;
      r.seed = out_.seed;
      r.iteration = iteration;
      r.agent = agent;
      r.policy_0 = point[agent];
      r.reward = rewards[agent];
      r.dist_global = dist;
      r.wall_ms = wall;
      out_.records.push_back(r);
    }
    out_.final_point = {p, q};
    out_.final_reward = u1;
    out_.final_dist_local.reset();
    out_.final_dist_global = dist;
  }

  void Differential(int iteration, double a1, double a2) {
    if (!std::isfinite(a1) || !std::isfinite(a2)) {
      throw NumericalError("non-finite action at iteration " +
                           std::to_string(iteration));
    }
    const double reward = DiffReward(a1, a2);
    const std::array<double, 2> point = {a1, a2};
    const double local =
        DistanceTo(point, MaxOfTwoQuadraticGame::kLocalOptimum.point);
    const double global =
        DistanceTo(point, MaxOfTwoQuadraticGame::kGlobalOptimum.point);
    const std::optional<double> wall = Wall();
    for (int agent = 0; agent < 2; ++agent) {
      RunRecord r;
      r.seed = out_.seed;
      r.iteration = iteration;
      r.agent = agent;
      r.action_mean = point[agent];
      r.reward = reward;
      r.dist_local = local;
      r.dist_global = global;
      r.wall_ms = wall;
      out_.records.push_back(r);
    }
    out_.final_point = {a1, a2};
    out_.final_reward = reward;
    out_.final_dist_local = local;
    out_.final_dist_global = global;
  }

 private:
  std::optional<double> Wall() const {
    if (!config_.record_wall_time) return std::nullopt;
    return std::chrono::duration<double, std::milli>(Clock::now() - start_)
        .count();
  }

  const ExperimentConfig& config_;
  RunOutcome& out_;
  Clock::time_point start_;
};

MatrixGame MakeMatrixGame(const ExperimentConfig& config) {
  return MatrixGame(config.r1.value_or(MatrixGame::kDefaultR1),
                    config.r2.value_or(MatrixGame::kDefaultR2), config.gamma);
}

double ScheduledBeta(const Pr2qConfig& c, int iteration, int iterations) {
  if (iterations <= 1) return c.options.beta;
  const double t = static_cast<double>(iteration - 1) / (iterations - 1);
  return c.options.beta + (c.beta_end - c.options.beta) * t;
}

void RunPr2q(const ExperimentConfig& config, std::uint64_t seed,
             Recorder& rec) {
  const MatrixGame game = MakeMatrixGame(config);
  Pr2qOptions opts = config.pr2q.options;
  opts.gamma = config.gamma;
  Pr2qAgent first(1, 2, 2, opts);
  Pr2qAgent second(1, 2, 2, opts);
  Rng rng_first = MakeRng(seed, "act", 0);
  Rng rng_second = MakeRng(seed, "act", 1);
  State state = game.InitialState();
  rec.Matrix(0, first.ActionDistribution(0)[0],
             second.ActionDistribution(0)[0], game);
  for (int it = 1; it <= config.iterations; ++it) {
    const double beta = ScheduledBeta(config.pr2q, it, config.iterations);
    first.set_beta(beta);
    second.set_beta(beta);
    for (int step = 0; step < config.steps_per_iteration; ++step) {
      const int a = first.SelectAction(state.index, rng_first);
      const int b = second.SelectAction(state.index, rng_second);
      StepResult res = game.Step(state, {static_cast<double>(a),
                                         static_cast<double>(b)});
      first.Update(state.index, a, b, res.rewards[0], res.next_state.index);
      second.Update(state.index, b, a, res.rewards[1], res.next_state.index);
      state = std::move(res.next_state);
    }
    if (!first.joint().AllFinite() || !second.joint().AllFinite()) {
      throw NumericalError("non-finite joint value table at iteration " +
                           std::to_string(it));
    }
    rec.Matrix(it, first.ActionDistribution(0)[0],
               second.ActionDistribution(0)[0], game);
  }
}

void RunIga(const ExperimentConfig& config, Recorder& rec) {
  const MatrixGame game = MakeMatrixGame(config);
  IgaState s{config.iga.init_p, config.iga.init_q};
  rec.Matrix(0, s.p, s.q, game);
  for (int it = 1; it <= config.iterations; ++it) {
    for (int step = 0; step < config.steps_per_iteration; ++step) {
      s = IgaStep(s, game, config.iga.step_size);
    }
    rec.Matrix(it, s.p, s.q, game);
  }
}

void RunSga(const ExperimentConfig& config, Recorder& rec) {
  const TwoPlayerPayoff payoff = [](int, double x, double y) {
    return std::max(MaxOfTwoQuadraticGame::BroadBranch(x, y),
                    MaxOfTwoQuadraticGame::NarrowBranch(x, y));
  };
  const PieceIndex piece = &MaxOfTwoQuadraticGame::ActiveBranch;
  SgaOptions opts = config.sga.options;
  opts.lo = MaxOfTwoQuadraticGame::kLo;
  opts.hi = MaxOfTwoQuadraticGame::kHi;
  Eigen::Vector2d x(config.sga.init[0], config.sga.init[1]);
  rec.Differential(0, x[0], x[1]);
  for (int it = 1; it <= config.iterations; ++it) {
    for (int step = 0; step < config.steps_per_iteration; ++step) {
      x = SgaStep(x, payoff, piece, opts);
    }
    rec.Differential(it, x[0], x[1]);
  }
}

std::unique_ptr<ContinuousLearner> MakeLearner(const ExperimentConfig& config,
                                               LearnerId id,
                                               const ContinuousAgentSpec& spec,
                                               std::uint64_t seed) {
  switch (id) {
    case LearnerId::kPr2ac: {
      Pr2acOptions o = config.pr2ac;
      o.gamma = config.gamma;
      return std::make_unique<Pr2acAgent>(spec, o, seed);
    }
    case LearnerId::kDdpgLite:
    case LearnerId::kDdpgOm: {
      DdpgOptions o = config.ddpg;
      o.gamma = config.gamma;
      o.opponent_model = id == LearnerId::kDdpgOm;
      return std::make_unique<DdpgAgent>(spec, o, seed);
    }
    default:
      throw std::logic_error("not a decentralized continuous learner: " +
                             LearnerName(id));
  }
}

void RunContinuous(const ExperimentConfig& config, std::uint64_t seed,
                   Recorder& rec) {
  const MaxOfTwoQuadraticGame game(config.gamma);
  const ActionScaler bounds{MaxOfTwoQuadraticGame::kLo,
                            MaxOfTwoQuadraticGame::kHi};
  ContinuousAgentSpec spec;
  spec.state_dim = game.spec().state_dim;
  spec.own = bounds;
  spec.opponents = {bounds};
  std::array<std::unique_ptr<ContinuousLearner>, 2> agents;
  for (int i = 0; i < 2; ++i) {
    agents[i] = MakeLearner(config, config.learners[i], spec,
                            DeriveSeed(seed, "agent", i));
  }
  PlayContinuous({agents[0].get(), agents[1].get()}, game, config.iterations,
                 config.steps_per_iteration,
                 [&](int it, const State& state) {
                   rec.Differential(it, agents[0]->PolicyMean(state),
                                    agents[1]->PolicyMean(state));
                 });
}

json OptionalJson(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

// Fraction-of-seeds verdict. Aborted runs count as failures.
json FractionVerdict(const std::vector<RunOutcome>& runs, double required,
                     const std::function<bool(const RunOutcome&)>& success,
                     json thresholds) {
  int hits = 0;
  for (const RunOutcome& r : runs) {
    if (!r.aborted && success(r)) ++hits;
  }
  const double fraction =
      runs.empty() ? 0.0 : static_cast<double>(hits) / runs.size();
  json v;
  v["successes"] = hits;
  v["runs"] = runs.size();
  v["fraction"] = fraction;
  v["required_fraction"] = required;
  v["thresholds"] = std::move(thresholds);
  v["pass"] = !runs.empty() && fraction >= required;
  return v;
}

// Distance ratio and quadrant coverage of the (p, q) path of one run.
struct RotationStats {
  double ratio = 0.0;
  int quadrants = 0;
  bool measured = false;
};

RotationStats Rotation(const RunOutcome& run, int early_iteration) {
  RotationStats s;
  std::optional<double> early;
  std::optional<double> last;
  bool seen[4] = {false, false, false, false};
  for (std::size_t k = 0; k + 1 < run.records.size(); k += 2) {
    const RunRecord& r0 = run.records[k];
    const RunRecord& r1 = run.records[k + 1];
    if (!r0.policy_0 || !r1.policy_0 || !r0.dist_global) return s;
    const double dp = *r0.policy_0 - kMatrixCenter[0];
    const double dq = *r1.policy_0 - kMatrixCenter[1];
    if (dp != 0.0 && dq != 0.0) seen[(dp > 0.0 ? 1 : 0) + (dq > 0.0 ? 2 : 0)] = true;
    if (r0.iteration == early_iteration) early = r0.dist_global;
    last = r0.dist_global;
  }
  if (!early || !last || *early <= 0.0) return s;
  s.measured = true;
  s.ratio = *last / *early;
  for (bool b : seen) s.quadrants += b ? 1 : 0;
  return s;
}

}  // namespace

void PlayContinuous(const std::array<ContinuousLearner*, 2>& agents,
                    const Game& game, int iterations, int steps_per_iteration,
                    const std::function<void(int, const State&)>& on_iteration) {
  State state = game.InitialState();
  on_iteration(0, state);
  for (int it = 1; it <= iterations; ++it) {
    for (int step = 0; step < steps_per_iteration; ++step) {
      const double a = agents[0]->Act(state);
      const double b = agents[1]->Act(state);
      StepResult res = game.Step(state, {a, b});
      agents[0]->Observe({state, a, {b}, res.rewards[0], res.next_state});
      agents[1]->Observe({state, b, {a}, res.rewards[1], res.next_state});
      agents[0]->Learn();
      agents[1]->Learn();
      state = std::move(res.next_state);
    }
    on_iteration(it, state);
  }
}

RunOutcome RunSingle(const ExperimentConfig& config, std::uint64_t seed) {
  RunOutcome out;
  out.seed = seed;
  Recorder rec(config, out);
  try {
    switch (config.learners.front()) {
      case LearnerId::kPr2q:
        RunPr2q(config, seed, rec);
        break;
      case LearnerId::kIga:
        RunIga(config, rec);
        break;
      case LearnerId::kSga:
        RunSga(config, rec);
        break;
      default:
        RunContinuous(config, seed, rec);
        break;
    }
  } catch (const std::exception& e) {
    out.aborted = true;
    out.reason = e.what();
  }
  return out;
}

json EvaluateCriteria(const ExperimentConfig& config,
                      const std::vector<RunOutcome>& runs) {
  const CriteriaConfig& c = config.criteria;
  json out = json::object();
  if (config.game == GameId::kMatrix) {
    out["matrix_equilibrium"] = FractionVerdict(
        runs, c.matrix_required_fraction,
        [&](const RunOutcome& r) {
          return r.final_point.size() == 2 &&
                 std::abs(r.final_point[0] - kMatrixCenter[0]) <=
                     c.matrix_tolerance &&
                 std::abs(r.final_point[1] - kMatrixCenter[1]) <=
                     c.matrix_tolerance;
        },
        {{"tolerance", c.matrix_tolerance}});
    json per_run = json::array();
    bool all = !runs.empty();
    for (const RunOutcome& r : runs) {
      const RotationStats s = Rotation(r, c.rotation_early_iteration);
      const bool ok = !r.aborted && s.measured &&
                      s.ratio >= c.rotation_min_ratio && s.quadrants == 4;
      all = all && ok;
      per_run.push_back({{"seed", r.seed},
                         {"distance_ratio", s.measured ? json(s.ratio) : json(nullptr)},
                         {"quadrants_visited", s.quadrants},
                         {"pass", ok}});
    }
    out["rotation"] = {{"early_iteration", c.rotation_early_iteration},
                       {"min_ratio", c.rotation_min_ratio},
                       {"runs", per_run},
                       {"pass", all}};
  } else {
    out["global_optimum"] = FractionVerdict(
        runs, c.global_required_fraction,
        [&](const RunOutcome& r) {
          return r.final_dist_global && *r.final_dist_global <= c.global_radius &&
                 r.final_reward >= c.global_min_reward;
        },
        {{"radius", c.global_radius}, {"min_reward", c.global_min_reward}});
    out["local_basin"] = FractionVerdict(
        runs, c.local_required_fraction,
        [&](const RunOutcome& r) {
          return r.final_reward <= c.local_max_reward;
        },
        {{"max_reward", c.local_max_reward}});
  }
  return out;
}

json BuildSummary(const ExperimentConfig& config,
                  const std::vector<RunOutcome>& runs,
                  const std::vector<std::string>& warnings) {
  json s;
  s["name"] = config.name;
  s["game"] = GameName(config.game);
  s["learners"] = json::array();
  for (LearnerId id : config.learners) s["learners"].push_back(LearnerName(id));
  s["config"] = ToJson(config);
  int aborted = 0;
  json list = json::array();
  for (const RunOutcome& r : runs) {
    json j;
    j["seed"] = r.seed;
    j["status"] = r.aborted ? "aborted" : "ok";
    if (r.aborted) j["reason"] = r.reason;
    j["iterations_recorded"] =
        r.records.empty() ? 0 : r.records.back().iteration;
    j["final_point"] = r.final_point;
    j["final_reward"] = r.final_reward;
    j["final_dist_local"] = OptionalJson(r.final_dist_local);
    j["final_dist_global"] = OptionalJson(r.final_dist_global);
    list.push_back(std::move(j));
    aborted += r.aborted ? 1 : 0;
  }
  s["num_runs"] = runs.size();
  s["num_aborted"] = aborted;
  s["runs"] = std::move(list);
  s["criteria"] = EvaluateCriteria(config, runs);
  if (config.game == GameId::kMaxOfTwoQuadratic) {
    // Reference contour values for consumers that redraw the reward surface.
    const std::array<std::array<double, 2>, 5> grid = {
        {{-5.0, -5.0}, {5.0, 5.0}, {0.0, 0.0}, {-10.0, 10.0}, {2.5, -7.5}}};
    json g = json::array();
    for (const auto& p : grid) {
      g.push_back({{"a1", p[0]}, {"a2", p[1]}, {"reward", DiffReward(p[0], p[1])}});
    }
    s["reward_grid"] = std::move(g);
  }
  s["warnings"] = warnings;
  return s;
}

ExperimentResult RunExperiment(
    const ExperimentConfig& config,
    const std::optional<std::filesystem::path>& out_dir, int max_threads) {
  config.Validate();
  ExperimentResult result;
  if (config.seeds.empty()) result.warnings.push_back("no seeds configured");
  const int n = static_cast<int>(config.seeds.size());
  result.runs.resize(n);
  const int threads = max_threads > 0 ? max_threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (int i = 0; i < n; ++i) {
    result.runs[i] = RunSingle(config, config.seeds[i]);
  }
  int aborted = 0;
  for (const RunOutcome& r : result.runs) {
    if (r.aborted) {
      ++aborted;
      result.warnings.push_back("seed " + std::to_string(r.seed) +
                                " aborted: " + r.reason);
    }
  }
  result.summary = BuildSummary(config, result.runs, result.warnings);
  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    for (const RunOutcome& r : result.runs) {
      WriteFileAtomic(*out_dir / ("run_" + std::to_string(r.seed) + ".csv"),
                      FormatCsv(r.records));
    }
    WriteFileAtomic(*out_dir / "summary.json", result.summary.dump(2) + "\n");
  }
  result.exit_code = (n > 0 && aborted == n) ? 2 : 0;
  return result;
}

}  // namespace pr2
