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

// Command-line front end: run experiments, list learners, print summaries.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pr2/config.h"
#include "pr2/experiment.h"
#include "pr2/run_record.h"

namespace {

std::vector<std::uint64_t> ParseSeedList(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos
                                                      : comma - start);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw pr2::ConfigError("invalid seed '" + item + "' in --seeds");
    }
    seeds.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return seeds;
}

void PrintCriteria(const nlohmann::json& summary) {
  std::cout << summary.value("name", "") << " ("
            << summary.value("game", "") << "): "
            << summary.value("num_runs", 0) << " runs, "
            << summary.value("num_aborted", 0) << " aborted\n";
  for (const auto& [name, verdict] : summary.at("criteria").items()) {
    std::cout << "  " << name << ": "
              << (verdict.value("pass", false) ? "pass" : "fail");
    if (verdict.contains("successes")) {
      std::cout << " (" << verdict["successes"] << "/" << verdict["runs"]
                << ", required " << verdict["required_fraction"] << ")";
    }
    std::cout << "\n";
  }
}

int Run(const std::string& config_path, const std::string& seeds_text,
        const std::string& out_dir, int threads) {
  pr2::ExperimentConfig config;
  try {
    config = pr2::LoadConfig(config_path);
    if (!seeds_text.empty()) {
      config.seeds = ParseSeedList(seeds_text);
      config.Validate();
    }
  } catch (const pr2::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }
  pr2::ExperimentResult result =
      pr2::RunExperiment(config, std::filesystem::path(out_dir), threads);
  for (const std::string& w : result.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  PrintCriteria(result.summary);
  return result.exit_code;
}

int Summarize(const std::string& out_dir) {
  const std::filesystem::path path =
      std::filesystem::path(out_dir) / "summary.json";
  nlohmann::json summary;
  try {
    summary = nlohmann::json::parse(pr2::ReadFile(path));
  } catch (const std::exception& e) {
    std::cerr << "cannot load " << path << ": " << e.what() << "\n";
    return 1;
  }
  PrintCriteria(summary);
  for (const auto& run : summary.at("runs")) {
    std::cout << "  seed " << run["seed"] << ": " << run["status"].get<std::string>()
              << ", final reward " << run["final_reward"] << ", point "
              << run["final_point"].dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Probabilistic recursive reasoning for multi-agent learning"};
  app.require_subcommand(1);

  std::string config_path;
  std::string seeds_text;
  std::string out_dir = "out";
  int threads = 0;
  CLI::App* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("--config", config_path, "JSON config file")->required();
  run->add_option("--seeds", seeds_text, "Comma-separated seed list override");
  run->add_option("--out", out_dir, "Output directory")->capture_default_str();
  run->add_option("--threads", threads, "Worker threads (0 = OpenMP default)");

  CLI::App* list = app.add_subcommand("list-learners", "List learner ids");
  std::string summary_dir = "out";
  CLI::App* summarize =
      app.add_subcommand("summarize", "Print the summary of an output directory");
  summarize->add_option("--out", summary_dir, "Output directory")
      ->capture_default_str();
  CLI::App* version = app.add_subcommand("version", "Print the version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*run) return Run(config_path, seeds_text, out_dir, threads);
    if (*list) {
      for (pr2::LearnerId id : pr2::AllLearners()) {
        std::cout << pr2::LearnerName(id) << "\t"
                  << (pr2::IsDiscreteLearner(id) ? "matrix" : "max_of_two_quadratic")
                  << "\n";
      }
      return 0;
    }
    if (*summarize) return Summarize(summary_dir);
    if (*version) {
      std::cout << "pr2 " << PR2_VERSION << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
